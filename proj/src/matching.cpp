#include "sunflower/matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sunflower/core.hpp"

namespace sunflower {

namespace {

// Greedy disjoint packing on the suffix: a genuine matching, so a lower bound.
int greedy_pack(std::span<const std::uint64_t> edges, std::size_t from, std::uint64_t used) {
  int count = 0;
  std::uint64_t acc = used;
  for (std::size_t j = from; j < edges.size(); ++j) {
    if ((edges[j] & acc) == 0) {
      acc |= edges[j];
      ++count;
    }
  }
  return count;
}

struct NuSearch {
  std::span<const std::uint64_t> edges;
  int n = 0;
  int k = 1;
  int best = 0;

  void run(std::size_t from, std::uint64_t used, int size) {
    int greedy = greedy_pack(edges, from, used);
    best = std::max(best, size + greedy);
    int free_slots = (n - std::popcount(used)) / k;
    int remaining = static_cast<int>(edges.size() - from);
    if (size + std::min(free_slots, remaining) <= best) return;
    for (std::size_t j = from; j < edges.size(); ++j) {
      if ((edges[j] & used) == 0) run(j + 1, used | edges[j], size + 1);
    }
  }
};

// First matching of size `need` in lexicographic DFS order = the lex-least one.
bool find_matching(std::span<const std::uint64_t> edges, std::size_t from, std::uint64_t used,
                   int need, int n, int k, std::vector<std::size_t>& picked) {
  if (need == 0) return true;
  int free_slots = (n - std::popcount(used)) / k;
  int remaining = static_cast<int>(edges.size() - from);
  if (std::min(free_slots, remaining) < need) return false;
  for (std::size_t j = from; j < edges.size(); ++j) {
    if ((edges[j] & used) != 0) continue;
    picked.push_back(j);
    if (find_matching(edges, j + 1, used | edges[j], need - 1, n, k, picked)) return true;
    picked.pop_back();
  }
  return false;
}

struct CoverSearch {
  std::span<const std::uint64_t> edges;
  int best;

  void run(std::uint64_t chosen, int count) {
    std::uint64_t first_uncovered = 0;
    for (std::uint64_t e : edges) {
      if ((e & chosen) == 0) {
        first_uncovered = e;
        break;
      }
    }
    if (first_uncovered == 0) {
      best = std::min(best, count);
      return;
    }
    // disjoint uncovered edges each need their own center
    int lower = 0;
    std::uint64_t acc = 0;
    for (std::uint64_t e : edges)
      if ((e & chosen) == 0 && (e & acc) == 0) {
        acc |= e;
        ++lower;
      }
    if (count + lower >= best) return;
    for (std::uint64_t m = first_uncovered; m != 0; m &= m - 1) {
      std::uint64_t bit = m & (~m + 1);
      run(chosen | bit, count + 1);
    }
  }
};

int cover_number_masks(std::span<const std::uint64_t> edges, int upper) {
  CoverSearch search{edges, upper + 1};
  // greedy start: first vertex of every uncovered edge in turn
  std::uint64_t chosen = 0;
  int greedy = 0;
  for (std::uint64_t e : edges) {
    if ((e & chosen) == 0) {
      chosen |= e & (~e + 1);
      ++greedy;
    }
  }
  search.best = std::min(search.best, greedy);
  search.run(0, 0);
  return search.best;
}

}  // namespace

int matching_number(const Family& h) {
  auto masks = h.masks();
  NuSearch search{std::span<const std::uint64_t>(masks), h.n, h.k, 0};
  search.run(0, 0, 0);
  return search.best;
}

std::optional<Matching> has_matching(const Family& h, int m) {
  if (m < 0) throw std::invalid_argument("matching size must be >= 0");
  if (m == 0) return Matching{};
  auto masks = h.masks();
  std::vector<std::size_t> picked;
  if (!find_matching(std::span<const std::uint64_t>(masks), 0, 0, m, h.n, h.k, picked))
    return std::nullopt;
  Matching out;
  out.reserve(picked.size());
  for (std::size_t j : picked) out.push_back(h.edges[j]);
  return out;
}

Matching maximum_matching(const Family& h) {
  auto m = has_matching(h, matching_number(h));
  return *m;
}

int cover_number(const Family& h) {
  if (h.edges.empty()) return 0;
  auto masks = h.masks();
  return cover_number_masks(std::span<const std::uint64_t>(masks), static_cast<int>(h.size()));
}

std::vector<int> minimum_cover(const Family& h) {
  int tau = cover_number(h);
  std::vector<int> centers;
  std::uint64_t chosen = 0;
  auto masks = h.masks();
  for (int v = 1; v <= h.n && static_cast<int>(centers.size()) < tau; ++v) {
    std::uint64_t bit = 1ull << (v - 1);
    std::vector<std::uint64_t> uncovered;
    for (std::uint64_t e : masks)
      if ((e & (chosen | bit)) == 0) uncovered.push_back(e);
    int rest = uncovered.empty()
                   ? 0
                   : cover_number_masks(std::span<const std::uint64_t>(uncovered),
                                        static_cast<int>(uncovered.size()));
    if (static_cast<int>(centers.size()) + 1 + rest == tau) {
      centers.push_back(v);
      chosen |= bit;
    }
  }
  return centers;
}

std::optional<std::vector<int>> cover_at_most(const Family& h, int s) {
  if (s < 0) throw std::invalid_argument("cover budget must be >= 0");
  if (cover_number(h) > s) return std::nullopt;
  return minimum_cover(h);
}

Matching lift_matching(const Family& h, int s, const Matching& shadow) {
  if (s < 0) throw std::invalid_argument("lift_matching: s must be >= 0");
  if (static_cast<int>(shadow.size()) > s + 1)
    throw std::invalid_argument("lift_matching: shadow matching larger than s+1");
  std::uint64_t seen = 0;
  for (const EdgeSet& f : shadow) {
    if (f.size() != h.k - 1)
      throw std::invalid_argument("lift_matching: shadow set is not a (k-1)-set");
    if ((f.mask() & seen) != 0)
      throw std::invalid_argument("lift_matching: shadow sets intersect");
    seen |= f.mask();
    if (codegree(h, f) < s * h.k + 1)
      throw std::invalid_argument("lift_matching: shadow set has codegree below s*k+1");
  }

  Matching lifted;
  lifted.reserve(shadow.size());
  std::uint64_t taken = 0;  // union of extensions chosen so far
  for (std::size_t i = 0; i < shadow.size(); ++i) {
    std::uint64_t later_cores = 0;
    for (std::size_t j = i + 1; j < shadow.size(); ++j) later_cores |= shadow[j].mask();
    std::uint64_t avoid = taken | later_cores;
    bool found = false;
    for (int x = 1; x <= h.n && !found; ++x) {
      std::uint64_t bit = 1ull << (x - 1);
      if ((bit & (avoid | shadow[i].mask())) != 0) continue;
      EdgeSet candidate = shadow[i].with(x);
      if (h.contains(candidate)) {
        lifted.push_back(candidate);
        taken |= candidate.mask();
        found = true;
      }
    }
    if (!found)
      throw std::runtime_error("lift_matching: no admissible extension; counting bound violated");
  }
  return lifted;
}

bool is_matching(const Family& h, std::span<const EdgeSet> m) {
  std::uint64_t used = 0;
  for (const EdgeSet& e : m) {
    if (!h.contains(e)) return false;
    if ((e.mask() & used) != 0) return false;
    used |= e.mask();
  }
  return true;
}

bool is_cover(const Family& h, std::span<const int> centers) {
  std::uint64_t mask = 0;
  for (int v : centers) mask |= 1ull << (v - 1);
  for (EdgeSet e : h.edges)
    if ((e.mask() & mask) == 0) return false;
  return true;
}

}  // namespace sunflower
