#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "polychrome/errors.hpp"

namespace polychrome {

struct GroupElement {
  std::vector<int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Finite abelian group given as an explicit list of cyclic factor sizes.
// Elements are residue vectors; the canonical element index is mixed-radix
// with the last factor varying fastest, which fixes the bit layout of
// coverage masks.
class Group {
 public:
  explicit Group(std::vector<int64_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw StructuralError("group needs at least one factor");
    order_ = 1;
    exponent_ = 1;
    for (int64_t m : moduli_) {
      if (m < 1) throw StructuralError("factor sizes must be >= 1");
      order_ *= m;
      exponent_ = std::lcm(exponent_, m);
    }
  }

  const std::vector<int64_t>& moduli() const { return moduli_; }
  int64_t order() const { return order_; }
  int64_t exponent() const { return exponent_; }
  int factor_count() const { return static_cast<int>(moduli_.size()); }

  GroupElement zero() const {
    return GroupElement{std::vector<int64_t>(moduli_.size(), 0)};
  }

  bool valid(const GroupElement& e) const {
    if (e.residues.size() != moduli_.size()) return false;
    for (size_t i = 0; i < moduli_.size(); ++i)
      if (e.residues[i] < 0 || e.residues[i] >= moduli_[i]) return false;
    return true;
  }

  void check(const GroupElement& e) const {
    if (!valid(e)) throw StructuralError("element does not fit group " + to_string());
  }

  // Reduce arbitrary integer coordinates into canonical range.
  GroupElement reduce(const std::vector<int64_t>& raw) const {
    if (raw.size() != moduli_.size())
      throw StructuralError("coordinate count does not match factor count");
    GroupElement e;
    e.residues.resize(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
      int64_t r = raw[i] % moduli_[i];
      e.residues[i] = r < 0 ? r + moduli_[i] : r;
    }
    return e;
  }

  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement out;
    out.residues.resize(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
      int64_t s = a.residues[i] + b.residues[i];
      out.residues[i] = s >= moduli_[i] ? s - moduli_[i] : s;
    }
    return out;
  }

  GroupElement negate(const GroupElement& a) const {
    check(a);
    GroupElement out;
    out.residues.resize(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i)
      out.residues[i] = a.residues[i] == 0 ? 0 : moduli_[i] - a.residues[i];
    return out;
  }

  // k * a for any integer k.
  GroupElement scale(int64_t k, const GroupElement& a) const {
    check(a);
    GroupElement out;
    out.residues.resize(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
      int64_t r = (k % moduli_[i]) * a.residues[i] % moduli_[i];
      out.residues[i] = r < 0 ? r + moduli_[i] : r;
    }
    return out;
  }

  int64_t index(const GroupElement& e) const {
    check(e);
    int64_t idx = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + e.residues[i];
    return idx;
  }

  GroupElement unindex(int64_t idx) const {
    if (idx < 0 || idx >= order_) throw StructuralError("element index out of range");
    GroupElement e;
    e.residues.resize(moduli_.size());
    for (size_t i = moduli_.size(); i-- > 0;) {
      e.residues[i] = idx % moduli_[i];
      idx /= moduli_[i];
    }
    return e;
  }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < moduli_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(moduli_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Group& a, const Group& b) { return a.moduli_ == b.moduli_; }

 private:
  std::vector<int64_t> moduli_;
  int64_t order_;
  int64_t exponent_;
};

inline GroupElement element_add(const Group& g, const GroupElement& a, const GroupElement& b) {
  return g.add(a, b);
}
inline int64_t canonical_index(const Group& g, const GroupElement& e) { return g.index(e); }
inline GroupElement canonical_unindex(const Group& g, int64_t idx) { return g.unindex(idx); }

// Subset of a group, one bit per canonical element index.
class CoverageMask {
 public:
  CoverageMask() : size_(0) {}
  explicit CoverageMask(int64_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  static CoverageMask full(int64_t size) {
    CoverageMask m(size);
    for (auto& w : m.words_) w = ~uint64_t{0};
    m.trim();
    return m;
  }

  int64_t size() const { return size_; }
  size_t word_count() const { return words_.size(); }
  const std::vector<uint64_t>& words() const { return words_; }

  void set(int64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(int64_t i) const { return words_[i >> 6] >> (i & 63) & 1; }

  int64_t popcount() const {
    int64_t n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  bool is_full() const { return popcount() == size_; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
  }

  // Lowest set/clear index, -1 when none.
  int64_t first_set() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int64_t(i) * 64 + std::countr_zero(words_[i]);
    return -1;
  }
  int64_t first_missing() const {
    for (int64_t i = 0; i < size_; ++i)
      if (!test(i)) return i;
    return -1;
  }

  CoverageMask& operator|=(const CoverageMask& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend bool operator==(const CoverageMask&, const CoverageMask&) = default;

 private:
  void trim() {
    if (size_ % 64 && !words_.empty())
      words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
  }

  int64_t size_;
  std::vector<uint64_t> words_;
};

// Image of `mask` under x -> x + e.  Bijective, so cardinality is preserved.
inline CoverageMask mask_translate(const Group& g, const CoverageMask& mask,
                                   const GroupElement& e) {
  if (mask.size() != g.order()) throw StructuralError("mask length does not match group order");
  CoverageMask out(mask.size());
  for (int64_t i = 0; i < mask.size(); ++i)
    if (mask.test(i)) out.set(g.index(g.add(g.unindex(i), e)));
  return out;
}

}  // namespace polychrome
