#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sunflower/family.hpp"

namespace sunflower {

// Pairwise disjoint edges taken from a host family.
using Matching = std::vector<EdgeSet>;

// Exact matching number, branch-and-bound over edges in lexicographic order.
int matching_number(const Family& h);

// The lexicographically least maximum matching.
Matching maximum_matching(const Family& h);

// A matching of size exactly m (lexicographically least) if one exists.
// Terminates early; m greater than nu just returns nullopt.
std::optional<Matching> has_matching(const Family& h, int m);

// Exact minimum vertex cover (transversal) size; branches on the vertices of
// the first uncovered edge.
int cover_number(const Family& h);

// The lexicographically least minimum cover, as ascending labels.
std::vector<int> minimum_cover(const Family& h);

// Lex-least cover of minimum size when that size is <= s, else nullopt.
std::optional<std::vector<int>> cover_at_most(const Family& h, int s);

// Lifts a matching of high-codegree (k-1)-sets to a matching in h itself:
// each shadow set F_i extends to an edge G_i of h, processed in order,
// avoiding earlier extensions and later cores; smallest extension vertex wins.
// Preconditions: shadow sets pairwise disjoint, size k-1, codegree >= s*k+1,
// and |shadow| <= s+1.
Matching lift_matching(const Family& h, int s, const Matching& shadow);

// Verifiers used by tests and by CLI sanity paths.
bool is_matching(const Family& h, std::span<const EdgeSet> m);
bool is_cover(const Family& h, std::span<const int> centers);

}  // namespace sunflower
