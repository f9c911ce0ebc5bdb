#pragma once

// Independent brute-force oracles. Everything here recomputes from first
// principles (superset scans, subset iteration, no pruning) so the library
// paths they check against share no code with them.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "sunflower/bigint.hpp"
#include "sunflower/binomial.hpp"
#include "sunflower/family.hpp"

namespace oracle {

using sunflower::Count;
using sunflower::EdgeSet;
using sunflower::Family;

inline int codegree_scan(const Family& h, EdgeSet e) {
  int count = 0;
  for (EdgeSet f : h.edges)
    if (e.subset_of(f)) ++count;
  return count;
}

inline void all_subsets(int n, int k, int next, EdgeSet prefix, std::vector<EdgeSet>& out) {
  if (prefix.size() == k) {
    out.push_back(prefix);
    return;
  }
  for (int v = next; v <= n; ++v) all_subsets(n, k, v + 1, prefix.with(v), out);
}

// Full codegree table by scanning every (k-1)-subset of [n].
inline std::map<std::uint64_t, int> codegree_table_scan(const Family& h) {
  std::vector<EdgeSet> keys;
  all_subsets(h.n, h.k - 1, 1, EdgeSet(), keys);
  std::map<std::uint64_t, int> out;
  for (EdgeSet key : keys) out[key.mask()] = codegree_scan(h, key);
  return out;
}

inline Count co_norm_scan(const Family& h, int p) {
  Count out(0);
  for (const auto& [mask, d] : codegree_table_scan(h))
    out += sunflower::pow_count(static_cast<std::uint64_t>(d), static_cast<unsigned>(p));
  return out;
}

// Sunflower predicate for core size k-1: the l edges intersect in exactly
// k-1 common vertices (petals are then automatically distinct singletons).
inline bool is_sunflower(const std::vector<EdgeSet>& edges) {
  std::uint64_t common = ~0ull;
  for (EdgeSet e : edges) common &= e.mask();
  return std::popcount(common) == edges[0].size() - 1;
}

// Count copies of the sunflower by brute force over all l-subsets of edges.
inline std::uint64_t sunflower_bruteforce(const Family& h, int l) {
  std::uint64_t count = 0;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == l) {
      std::vector<EdgeSet> chosen;
      for (std::size_t i : pick) chosen.push_back(h.edges[i]);
      if (is_sunflower(chosen)) ++count;
      return;
    }
    for (std::size_t j = from; j < h.edges.size(); ++j) {
      pick.push_back(j);
      self(self, j + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

// Minimum transversal by iterating all vertex subsets in size order.
inline int cover_exhaustive(const Family& h) {
  if (h.edges.empty()) return 0;
  for (int size = 1; size <= h.n; ++size) {
    std::vector<EdgeSet> subsets;
    all_subsets(h.n, size, 1, EdgeSet(), subsets);
    for (EdgeSet c : subsets) {
      bool covers = true;
      for (EdgeSet e : h.edges)
        if (!e.intersects(c)) {
          covers = false;
          break;
        }
      if (covers) return size;
    }
  }
  return h.n;
}

// Matching decision by plain recursion, no bounds.
inline bool has_matching_plain(const std::vector<std::uint64_t>& masks, std::size_t from,
                               std::uint64_t used, int need) {
  if (need == 0) return true;
  for (std::size_t j = from; j < masks.size(); ++j)
    if ((masks[j] & used) == 0 && has_matching_plain(masks, j + 1, used | masks[j], need - 1))
      return true;
  return false;
}

inline int matching_number_plain(const Family& h) {
  auto masks = h.masks();
  int nu = 0;
  while (has_matching_plain(masks, 0, 0, nu + 1)) ++nu;
  return nu;
}

struct UnprunedMaxResult {
  std::uint64_t optimum = 0;  // raw objective value (size counted directly)
  std::uint64_t optimal_count = 0;
};

// Second, independent extremal enumerator: iterate every subset of the edge
// universe, filter nu <= s, evaluate the objective from a fresh codegree
// scan. Only run when C(n,k) <= 20.
enum class ObjKind { size, co, sunflower };

inline UnprunedMaxResult unpruned_max(int n, int k, int s, ObjKind kind, int param) {
  std::vector<EdgeSet> universe;
  all_subsets(n, k, 1, EdgeSet(), universe);
  const std::size_t m = universe.size();
  if (m > 20) throw std::runtime_error("unpruned enumerator capped at C(n,k) <= 20");
  std::vector<EdgeSet> shadows;
  all_subsets(n, k - 1, 1, EdgeSet(), shadows);

  UnprunedMaxResult out;
  bool seen_any = false;
  for (std::uint64_t pick = 0; pick < (1ull << m); ++pick) {
    std::vector<std::uint64_t> masks;
    for (std::size_t j = 0; j < m; ++j)
      if ((pick >> j) & 1u) masks.push_back(universe[j].mask());
    if (has_matching_plain(masks, 0, 0, s + 1)) continue;  // nu > s
    std::uint64_t value = 0;
    if (kind == ObjKind::size) {
      value = masks.size();
    } else {
      for (EdgeSet key : shadows) {
        std::uint64_t d = 0;
        for (std::uint64_t em : masks)
          if ((key.mask() & ~em) == 0) ++d;
        value += kind == ObjKind::co ? sunflower::pow64(d, static_cast<unsigned>(param))
                                     : sunflower::binom64(static_cast<long long>(d), param);
      }
    }
    if (!seen_any || value > out.optimum) {
      out.optimum = value;
      out.optimal_count = 1;
      seen_any = true;
    } else if (value == out.optimum) {
      ++out.optimal_count;
    }
  }
  return out;
}

}  // namespace oracle
