#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polychrome/errors.hpp"
#include "polychrome/groups.hpp"

namespace polychrome {

// Region 1-count vector of an ell-face: entry i is the number of 1s in the
// i-th region delimited by the face's free coordinates.
struct FaceVector {
  std::vector<int64_t> entries;
};

// Coloring of ell-faces induced by an additive surjection onto `group`:
// the face with region counts (s_0,...,s_ell) gets color sum_i s_i*weights[i].
struct LinearColoring {
  int ell = 0;
  Group group{std::vector<int64_t>{1}};
  std::vector<GroupElement> weights;  // weights[i] = image of the i-th unit region vector
  std::string label;
};

inline bool weights_generate_group(const Group& g, const std::vector<GroupElement>& weights) {
  // Closure of {0} under adding each weight; the generated subgroup.
  std::vector<char> seen(g.order(), 0);
  std::vector<int64_t> stack{g.index(g.zero())};
  seen[stack[0]] = 1;
  int64_t count = 1;
  while (!stack.empty()) {
    GroupElement x = g.unindex(stack.back());
    stack.pop_back();
    for (const auto& w : weights) {
      int64_t y = g.index(g.add(x, w));
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.order();
}

inline LinearColoring make_linear(Group group, std::vector<GroupElement> weights, int ell,
                                  std::string label = {}) {
  if (ell < 0) throw StructuralError("ell must be >= 0");
  if (weights.size() != size_t(ell) + 1)
    throw StructuralError("need exactly ell+1 weights, got " + std::to_string(weights.size()));
  for (const auto& w : weights) group.check(w);
  if (!weights_generate_group(group, weights))
    throw NotSurjective("weights do not generate the group " + group.to_string());
  return LinearColoring{ell, std::move(group), std::move(weights), std::move(label)};
}

inline GroupElement face_color(const LinearColoring& c, const FaceVector& v) {
  if (v.entries.size() != size_t(c.ell) + 1)
    throw StructuralError("face vector length does not match ell+1");
  GroupElement acc = c.group.zero();
  for (size_t i = 0; i < v.entries.size(); ++i) {
    if (v.entries[i] < 0) throw StructuralError("face vector entries must be >= 0");
    acc = c.group.add(acc, c.group.scale(v.entries[i], c.weights[i]));
  }
  return acc;
}

// Construction result: the coloring plus the dimension it is polychromatic
// for, and an optional remark (used where a published table differs from the
// construction's count).
struct BuiltColoring {
  LinearColoring coloring;
  int d = 0;
  std::optional<std::string> note;
};

// Balanced moduli m_0 >= m_1 >= ... summing to d+1, each region projected
// mod its own factor.
inline BuiltColoring basic_coloring(int d, int ell) {
  if (ell < 0 || d < ell) throw ParamViolation("basic coloring needs d >= ell >= 0");
  int64_t q = (d + 1) / (ell + 1);
  int64_t r = (d + 1) % (ell + 1);
  std::vector<int64_t> moduli;
  for (int64_t i = 0; i < r; ++i) moduli.push_back(q + 1);
  for (int64_t i = r; i <= ell; ++i) moduli.push_back(q);
  Group g(moduli);
  std::vector<GroupElement> weights;
  for (int i = 0; i <= ell; ++i) {
    std::vector<int64_t> e(moduli.size(), 0);
    e[i] = 1 % moduli[i];
    weights.push_back(GroupElement{std::move(e)});
  }
  std::string label = "basic(d=" + std::to_string(d) + ",ell=" + std::to_string(ell) + ")";
  return BuiltColoring{make_linear(std::move(g), std::move(weights), ell, label), d, {}};
}

struct CruxParams {
  enum class Variant { A, B };
  int64_t t = 0;
  int64_t modulus_n = 0;  // second factor, kept distinct from the ambient dimension
  Variant variant = Variant::A;

  int64_t m() const { return variant == Variant::A ? t * t + 1 : t * t + t + 1; }
  int64_t target_d() const {
    return variant == Variant::A ? 2 * t + modulus_n - 1 : 2 * t + modulus_n;
  }

  void validate() const {
    int64_t tmin = variant == Variant::A ? 2 : 1;
    if (t < tmin)
      throw ParamViolation("variant " + std::string(variant == Variant::A ? "A" : "B") +
                           " needs t >= " + std::to_string(tmin));
    if (modulus_n <= t) throw ParamViolation("need n > t");
  }

  std::string to_string() const {
    return "crux(t=" + std::to_string(t) + ",n=" + std::to_string(modulus_n) + "," +
           (variant == Variant::A ? "A" : "B") + ")";
  }

  friend bool operator==(const CruxParams&, const CruxParams&) = default;
};

// The two-factor family (p,q,r) -> (p - t*q, p + q + r) over Z_m + Z_n.
inline BuiltColoring crux_coloring(const CruxParams& p) {
  p.validate();
  int64_t m = p.m();
  Group g({m, p.modulus_n});
  std::vector<GroupElement> weights = {
      g.reduce({1, 1}),
      g.reduce({-p.t, 1}),
      g.reduce({0, 1}),
  };
  int d = static_cast<int>(p.target_d());
  std::string label = p.to_string() + " d=" + std::to_string(d);
  return BuiltColoring{make_linear(std::move(g), std::move(weights), 2, label), d, {}};
}

// Case split on d mod 3; the resulting color counts are
// (k^2+1)(k+1), (k^2+k+1)(k+1), (k^2+k+1)(k+2) for d = 3k, 3k+1, 3k+2.
inline BuiltColoring main_coloring(int d) {
  if (d < 4) throw ParamViolation("main construction starts at d = 4");
  int64_t k = d / 3;
  CruxParams p;
  switch (d % 3) {
    case 0: p = CruxParams{k, k + 1, CruxParams::Variant::A}; break;
    case 1: p = CruxParams{k, k + 1, CruxParams::Variant::B}; break;
    default: p = CruxParams{k, k + 2, CruxParams::Variant::B}; break;
  }
  BuiltColoring built = crux_coloring(p);
  built.coloring.label = "main(d=" + std::to_string(d) + ") = " + p.to_string();
  if (d == 7) {
    built.note = "construction gives 21=7*3 at d=7; the published table prints 20=5*4";
  }
  return built;
}

// Direct sum: c0's weights act on the leading ell0+1 regions, c1's on the
// trailing ell1+1, with one extra separating star (region counts add).
inline LinearColoring product_coloring(const LinearColoring& c0, const LinearColoring& c1) {
  std::vector<int64_t> moduli = c0.group.moduli();
  moduli.insert(moduli.end(), c1.group.moduli().begin(), c1.group.moduli().end());
  Group g(std::move(moduli));
  size_t f0 = c0.group.moduli().size();
  size_t f1 = c1.group.moduli().size();
  std::vector<GroupElement> weights;
  for (const auto& w : c0.weights) {
    std::vector<int64_t> r = w.residues;
    r.insert(r.end(), f1, 0);
    weights.push_back(GroupElement{std::move(r)});
  }
  for (const auto& w : c1.weights) {
    std::vector<int64_t> r(f0, 0);
    r.insert(r.end(), w.residues.begin(), w.residues.end());
    weights.push_back(GroupElement{std::move(r)});
  }
  std::string label;
  if (!c0.label.empty() || !c1.label.empty()) label = c0.label + " x " + c1.label;
  return make_linear(std::move(g), std::move(weights), c0.ell + c1.ell + 1, std::move(label));
}

inline BuiltColoring product_coloring(const BuiltColoring& b0, const BuiltColoring& b1) {
  return BuiltColoring{product_coloring(b0.coloring, b1.coloring), b0.d + b1.d + 1, {}};
}

}  // namespace polychrome
