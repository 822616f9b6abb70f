#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "polychrome/bounds.hpp"
#include "polychrome/colorings.hpp"
#include "polychrome/verifier.hpp"

namespace polychrome {

// One representative per isomorphism class: the multiset of prime-power
// cyclic factors, as a descending modulus list.
inline std::vector<Group> enumerate_abelian_groups(int64_t max_order) {
  std::vector<Group> out;
  for (int64_t order = 1; order <= max_order; ++order) {
    if (order == 1) {
      out.emplace_back(std::vector<int64_t>{1});
      continue;
    }
    // factor
    std::vector<std::pair<int64_t, int>> factors;
    int64_t n = order;
    for (int64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);

    // partitions of each exponent
    auto partitions = [](int n) {
      std::vector<std::vector<int>> out;
      std::vector<int> cur;
      auto rec = [&](auto&& self, int left, int mx) -> void {
        if (left == 0) {
          out.push_back(cur);
          return;
        }
        for (int k = std::min(left, mx); k >= 1; --k) {
          cur.push_back(k);
          self(self, left - k, k);
          cur.pop_back();
        }
      };
      rec(rec, n, n);
      return out;
    };

    std::vector<std::vector<std::vector<int>>> parts;
    for (auto [p, e] : factors) parts.push_back(partitions(e));

    std::vector<size_t> pick(factors.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<int64_t> moduli;
      for (size_t i = 0; i < factors.size(); ++i) {
        for (int k : parts[i][pick[i]]) {
          int64_t pw = 1;
          for (int j = 0; j < k; ++j) pw *= factors[i].first;
          moduli.push_back(pw);
        }
      }
      std::sort(moduli.rbegin(), moduli.rend());
      out.emplace_back(std::move(moduli));
      size_t i = factors.size();
      done = true;
      while (i-- > 0) {
        if (++pick[i] < parts[i].size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
    }
  }
  return out;
}

struct SearchOptions {
  uint64_t budget = VerifyOptions::kDefaultBudget;
  int workers = 0;
  bool prune = true;
};

struct SearchResult {
  int d = 0;
  int ell = 0;
  int64_t max_order_searched = 0;
  std::vector<LinearColoring> best;  // all winners, canonical order
  int64_t best_count = 0;
  uint64_t candidates = 0;
  uint64_t not_surjective = 0;
  uint64_t pruned_by_bound = 0;
  uint64_t refuted = 0;
  uint64_t verified = 0;
  uint64_t budget_skipped = 0;
  uint64_t groups_examined = 0;
  uint64_t groups_skipped_by_binom = 0;
  bool complete = true;
};

namespace detail {

// Deterministic label for ordering winners.
inline std::string weight_key(const LinearColoring& c) {
  std::string key = c.group.to_string() + ":";
  for (const auto& w : c.weights) {
    key += "[";
    for (size_t i = 0; i < w.residues.size(); ++i)
      key += (i ? "," : "") + std::to_string(w.residues[i]);
    key += "]";
  }
  return key;
}

}  // namespace detail

// Exhaustive search over every weight tuple of every abelian group of order
// up to max_order: skips non-surjective tuples, prunes candidates that the
// pigeonhole or lattice bounds already refute, verifies the rest exactly,
// and returns every coloring achieving the maximum verified color count.
inline SearchResult search_best_linear(int d, int ell, int64_t max_order,
                                       SearchOptions opt = {}) {
  if (ell < 0 || d < ell) throw ParamViolation("need d >= ell >= 0");
  if (max_order < 1) throw ParamViolation("need max_order >= 1");

  SearchResult res;
  res.d = d;
  res.ell = ell;
  res.max_order_searched = max_order;

  const int64_t hard_bound = binom_upper(d, ell);

  struct Candidate {
    const Group* group;
    std::vector<int64_t> widx;
  };
  std::vector<Group> groups = enumerate_abelian_groups(max_order);
  std::vector<Candidate> cands;
  for (const auto& g : groups) {
    if (opt.prune && g.order() > hard_bound) {
      ++res.groups_skipped_by_binom;
      continue;
    }
    ++res.groups_examined;
    std::vector<int64_t> widx(ell + 1, 0);
    while (true) {
      cands.push_back(Candidate{&g, widx});
      int i = ell;
      while (i >= 0) {
        if (++widx[i] < g.order()) break;
        widx[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  res.candidates = cands.size();

  struct Partial {
    uint64_t not_surjective = 0, pruned = 0, refuted = 0, verified = 0, budget_skipped = 0;
    int64_t best_count = 0;
    std::vector<LinearColoring> best;
  };

  auto eval_range = [&](size_t lo, size_t hi) {
    Partial p;
    for (size_t i = lo; i < hi; ++i) {
      const Candidate& cand = cands[i];
      const Group& g = *cand.group;
      std::vector<GroupElement> weights;
      weights.reserve(ell + 1);
      for (int64_t idx : cand.widx) weights.push_back(g.unindex(idx));
      if (!weights_generate_group(g, weights)) {
        ++p.not_surjective;
        continue;
      }
      LinearColoring c{ell, g, std::move(weights), {}};
      if (opt.prune && ell == 2) {
        LatticeCertificate cert = lattice_bound_check(c, d);
        if (!(cert.sphere_ok && cert.frustum_ok)) {
          ++p.pruned;
          continue;
        }
      }
      Verdict v;
      try {
        v = verify_reduced(c, d, VerifyOptions{opt.budget, 1});
      } catch (const BudgetExceeded&) {
        ++p.budget_skipped;
        continue;
      }
      if (!v.polychromatic) {
        ++p.refuted;
        continue;
      }
      ++p.verified;
      if (g.order() > p.best_count) {
        p.best_count = g.order();
        p.best.clear();
      }
      if (g.order() == p.best_count) p.best.push_back(std::move(c));
    }
    return p;
  };

  int workers = opt.workers > 0 ? opt.workers
                                : std::max(1u, std::thread::hardware_concurrency());
  std::vector<Partial> parts;
  if (workers == 1 || cands.size() < 64) {
    parts.push_back(eval_range(0, cands.size()));
  } else {
    size_t chunk = (cands.size() + workers - 1) / workers;
    std::vector<std::future<Partial>> futs;
    for (size_t lo = 0; lo < cands.size(); lo += chunk) {
      size_t hi = std::min(lo + chunk, cands.size());
      futs.push_back(std::async(std::launch::async, [&, lo, hi] { return eval_range(lo, hi); }));
    }
    for (auto& f : futs) parts.push_back(f.get());
  }

  for (auto& p : parts) {
    res.not_surjective += p.not_surjective;
    res.pruned_by_bound += p.pruned;
    res.refuted += p.refuted;
    res.verified += p.verified;
    res.budget_skipped += p.budget_skipped;
    if (p.best_count > res.best_count) {
      res.best_count = p.best_count;
      res.best.clear();
    }
    if (p.best_count == res.best_count)
      for (auto& c : p.best) res.best.push_back(std::move(c));
  }
  std::sort(res.best.begin(), res.best.end(),
            [](const LinearColoring& a, const LinearColoring& b) {
              return detail::weight_key(a) < detail::weight_key(b);
            });
  res.complete = res.budget_skipped == 0;
  return res;
}

}  // namespace polychrome
