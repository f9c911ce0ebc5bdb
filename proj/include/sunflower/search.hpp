#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sunflower/bigint.hpp"
#include "sunflower/family.hpp"

namespace sunflower {

// What to maximize over families with bounded matching number.
struct Objective {
  enum class Kind { size, co_norm, sunflower };
  Kind kind = Kind::size;
  int param = 0;  // p for co_norm, l for sunflower

  static Objective size() { return {Kind::size, 0}; }
  static Objective co(int p) { return {Kind::co_norm, p}; }
  static Objective sunflowers(int l) { return {Kind::sunflower, l}; }
  static Objective parse(std::string_view text);  // "size" | "co:P" | "sunflower:L"

  std::string str() const;
  void validate() const;  // p >= 1, l >= 2
  Count eval(const Family& h) const;
};

struct SearchReport {
  Count optimum;
  std::vector<Family> witnesses;    // pairwise non-isomorphic, at most 16 stored
  std::uint64_t optimal_count = 0;  // exhaustive: exact number of optimal families
  std::uint64_t nodes_explored = 0;
  std::string method;
  std::optional<std::uint64_t> seed;
  // hill-climb tuning, recorded for reproducibility
  int restarts = 0;
  int steps = 0;
  int patience = 0;
  int threads = 1;
  std::uint64_t hits = 0;  // restarts whose final family attains the reported optimum
};

// Exact maximum of obj over all families on [n] with nu <= s. Refuses unless
// C(n,k) <= 24. DFS over edges in lexicographic order; branches that cannot
// tie the incumbent are pruned, so optimal_count is exact.
SearchReport exhaustive_max(int n, int k, int s, const Objective& obj);

// Seeded randomized local search: add / remove / swap moves over feasible
// families, sideways moves rationed by a patience budget. Reproducible from
// the seed regardless of thread count.
SearchReport hill_climb(int n, int k, int s, const Objective& obj, std::uint64_t seed,
                        int restarts, int steps, int threads = 1);

struct ThresholdRow {
  int n;
  Count value_H;
  Count value_Ak;
  char winner;  // 'H', 'A' or '='
};

struct ThresholdReport {
  int k = 0, s = 0;
  Objective objective;
  std::vector<ThresholdRow> rows;
  std::optional<int> first_H_win;  // first n where H strictly wins
  bool h_wins_through_end = false; // winner stays H from first_H_win to n_to
};

// Closed-form comparison of H_{n,k,s} against A_{n,k,s,k} for n_from..n_to.
ThresholdReport threshold_scan(int k, int s, const Objective& obj, int n_from, int n_to);

struct SequenceCheckRow {
  long long m;
  std::uint64_t max_sum;
  std::uint64_t bound;
  bool equality;
  std::vector<int> argmax;  // a maximizing sequence
};

struct SequenceReport {
  int a, b, c, n, p;
  std::vector<SequenceCheckRow> rows;  // one per admissible m
  bool all_hold;
};

// Exhaustively checks max sum(x_i^p) <= c a^p + (m - ca) b^(p-1) over all
// non-increasing capped sequences, for every m with ca < m < ca + (n-c) b.
SequenceReport verify_sequence_inequality(int a, int b, int c, int n, int p);

struct GraphBoundReport {
  int n, s;
  std::uint64_t max_size;
  std::uint64_t bound;  // s(2s+1)
  bool holds;
  bool attained;
  std::vector<Family> witnesses;  // extremal graphs up to isomorphism, capped at 16
  std::uint64_t witness_count;    // exact number of maximum graphs
  std::uint64_t nodes_explored;
};

// Exhaustive over 2-uniform families on [n] with max degree <= 2s and
// nu <= s; refuses above n = 8.
GraphBoundReport verify_graph_bound(int n, int s);

// Erdos-Renyi edge sampling followed by repeatedly removing a random edge of
// a maximum matching until nu <= s.
Family random_family_with_matching_bound(int n, int k, int s, double q, std::mt19937_64& rng);

struct CorpusItem {
  Family family;
  int s_target;
};

// The seeded random corpus used by the property suites: k in {2,3}, n <= 12,
// s in {1,2,3}, q in {0.1, 0.3, 0.5}, all drawn from the per-item stream.
std::vector<CorpusItem> random_corpus(std::uint64_t seed, int count);

}  // namespace sunflower
