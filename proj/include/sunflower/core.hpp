#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sunflower/bigint.hpp"
#include "sunflower/family.hpp"

namespace sunflower {

using VertexSet = EdgeSet;

// Codegrees of all (k-1)-subsets of [n]; zero values are implicit and queries
// on absent keys report 0.
class CodegreeTable {
 public:
  CodegreeTable(int n, int k) : n_(n), k_(k) {}

  int n() const { return n_; }
  int k() const { return k_; }

  int at(EdgeSet key) const;
  // Nonzero entries, lexicographically sorted by key.
  const std::vector<std::pair<EdgeSet, int>>& nonzero() const { return nonzero_; }

 private:
  friend CodegreeTable codegree_table(const Family&);
  int n_;
  int k_;
  std::unordered_map<std::uint64_t, int> map_;
  std::vector<std::pair<EdgeSet, int>> nonzero_;
};

// d_H(E) = number of edges containing E; |E| must be k-1.
int codegree(const Family& h, EdgeSet e);

CodegreeTable codegree_table(const Family& h);

// co_p(H) = sum over all (k-1)-subsets of d^p, with 0^0 = 1 so co_0 = C(n,k-1).
Count co_norm(const Family& h, int p);

// Number of l-petal sunflowers whose core is a (k-1)-set: sum of C(d, l).
Count sunflower_count(const Family& h, int l);

// The (k-1)-uniform family of all (k-1)-sets with codegree >= d.
Family high_codegree_family(const Family& h, int d);

// Subfamily of edges disjoint from the given vertex set; ground set unchanged.
Family restrict_avoid(const Family& h, VertexSet avoid);

int max_codegree(const Family& h);

// A vertex contained in every edge (smallest label), if any. The empty family
// is vacuously a star and reports vertex 1.
std::optional<int> trivial_center(const Family& h);

// True iff some permutation of [n] maps h1's edge set onto h2's. Exact; the
// workbench caps isomorphism queries at n <= 12 and refuses above.
bool isomorphic(const Family& h1, const Family& h2);

}  // namespace sunflower
