#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "polychrome/colorings.hpp"
#include "polychrome/errors.hpp"

namespace polychrome {

struct Obligation {
  std::string name;
  std::string universe;
  bool pass = false;
  std::string counterexample;  // empty when pass
};

struct CertificateReport {
  CruxParams params;
  std::vector<Obligation> obligations;
  bool pass = false;
};

namespace detail {

// u ranges over [0, u_count), v over [0, v_count); the achievable first
// coordinates are { u - t*v mod m }.
struct FamilyRange {
  int64_t u_count;
  int64_t v_count;
};

inline std::set<int64_t> achievable_first(int64_t m, int64_t t, FamilyRange f) {
  std::set<int64_t> out;
  for (int64_t u = 0; u < f.u_count; ++u)
    for (int64_t v = 0; v < f.v_count; ++v) out.insert(((u - t * v) % m + m) % m);
  return out;
}

inline std::string set_to_string(const std::set<int64_t>& s) {
  std::string out = "{";
  for (int64_t x : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(x);
  }
  return out + "}";
}

inline std::string range_str(FamilyRange f) {
  return "u in [0," + std::to_string(f.u_count - 1) + "], v in [0," +
         std::to_string(f.v_count - 1) + "]";
}

}  // namespace detail

// Finite proof obligations behind the crux family.  The first two star
// families must miss exactly {t} and {t+1..2t} in the first coordinate; the
// two deeper families must reach every first coordinate; and for every
// possible base offset h and every shift delta in [1, t] there must be
// face choices hitting h and h+delta whose region-count sums differ mod n,
// so the two families' missing colors never coincide.  The offset h is
// quantified over all of Z_m, which is exactly the reachable set since
// gcd(t, m) = 1.
inline CertificateReport crux_certificate(const CruxParams& p) {
  p.validate();
  const int64_t t = p.t;
  const int64_t n = p.modulus_n;
  const int64_t m = p.m();
  const bool va = p.variant == CruxParams::Variant::A;

  // Fixed-star counts (u_count, v_count) = (region0 + 1, region1 + 1) of the
  // four families' first two regions.
  detail::FamilyRange f1 = va ? detail::FamilyRange{t, t} : detail::FamilyRange{t, t + 1};
  detail::FamilyRange f2 = va ? detail::FamilyRange{t + 1, t - 1} : detail::FamilyRange{t + 1, t};
  detail::FamilyRange f3 = va ? detail::FamilyRange{t, t + 1} : detail::FamilyRange{t, t + 2};
  detail::FamilyRange f4 = va ? detail::FamilyRange{t + 1, t} : detail::FamilyRange{t + 1, t + 1};

  CertificateReport rep;
  rep.params = p;

  std::set<int64_t> zm;
  for (int64_t x = 0; x < m; ++x) zm.insert(x);

  auto expect_missing = [&](const std::string& name, detail::FamilyRange f,
                            const std::set<int64_t>& want_missing) {
    std::set<int64_t> got = detail::achievable_first(m, t, f);
    std::set<int64_t> missing;
    std::set_difference(zm.begin(), zm.end(), got.begin(), got.end(),
                        std::inserter(missing, missing.begin()));
    Obligation ob;
    ob.name = name;
    ob.universe = detail::range_str(f) + " mod " + std::to_string(m);
    ob.pass = missing == want_missing;
    if (!ob.pass)
      ob.counterexample = "missing set is " + detail::set_to_string(missing) + ", expected " +
                          detail::set_to_string(want_missing);
    rep.obligations.push_back(std::move(ob));
  };

  expect_missing("family1_missing_exactly_t", f1, {t % m});
  std::set<int64_t> want2;
  for (int64_t i = 1; i <= t; ++i) want2.insert((t + i) % m);
  expect_missing("family2_missing_t+1..2t", f2, want2);
  expect_missing("family3_full_first_coordinate", f3, {});
  expect_missing("family4_full_first_coordinate", f4, {});

  {
    Obligation ob;
    ob.name = "offset_ranges_over_Zm";
    ob.universe = "gcd(t, m) with t=" + std::to_string(t) + ", m=" + std::to_string(m);
    ob.pass = std::gcd(t, m) == 1;
    if (!ob.pass) ob.counterexample = "gcd(t,m) != 1";
    rep.obligations.push_back(std::move(ob));
  }

  {
    // For each first coordinate h, the sums u+v mod n realizable in families
    // 3 and 4.  The pair (h, h+delta) is compatible unless both sum sets are
    // the same singleton.
    std::vector<std::set<int64_t>> s3(m), s4(m);
    for (int64_t u = 0; u < f3.u_count; ++u)
      for (int64_t v = 0; v < f3.v_count; ++v)
        s3[((u - t * v) % m + m) % m].insert((u + v) % n);
    for (int64_t u = 0; u < f4.u_count; ++u)
      for (int64_t v = 0; v < f4.v_count; ++v)
        s4[((u - t * v) % m + m) % m].insert((u + v) % n);

    Obligation ob;
    ob.name = "critical_colors_compatible";
    ob.universe = "all h in Z_" + std::to_string(m) + ", delta in [1," + std::to_string(t) + "]";
    ob.pass = true;
    for (int64_t h = 0; h < m && ob.pass; ++h) {
      for (int64_t delta = 1; delta <= t; ++delta) {
        const auto& a = s3[h];
        const auto& b = s4[(h + delta) % m];
        bool compatible = !a.empty() && !b.empty() && !(a.size() == 1 && b.size() == 1 && a == b);
        if (!compatible) {
          ob.pass = false;
          ob.counterexample = "h=" + std::to_string(h) + ", delta=" + std::to_string(delta);
          break;
        }
      }
    }
    rep.obligations.push_back(std::move(ob));
  }

  rep.pass = std::all_of(rep.obligations.begin(), rep.obligations.end(),
                         [](const Obligation& o) { return o.pass; });
  return rep;
}

}  // namespace polychrome
