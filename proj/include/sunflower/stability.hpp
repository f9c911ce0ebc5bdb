#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sunflower/bigint.hpp"
#include "sunflower/family.hpp"

namespace sunflower {

// A cover of the family by at most s stars: every edge lies in the part of
// its smallest-label center.
struct StarDecomposition {
  std::vector<int> centers;   // ascending
  std::vector<Family> parts;  // parts[i] = edges assigned to centers[i]
};

// Why the constructive pipeline stopped.
struct Diagnostic {
  enum class Step { nontrivial_part, uncovered_edge };
  Step step;
  std::string detail;
};

// Decomposition with <= s centers iff cover_number(h) <= s; centers are the
// lex-least minimum cover.
std::optional<StarDecomposition> stars_cover(const Family& h, int s);

// The constructive pipeline: pick the lex-least maximum matching F_1..F_s,
// form B_i (edges meeting F_i only), read a center off each nonempty B_i,
// check coverage. Sound but incomplete at small n; callers may fall back to
// stars_cover on Diagnostic. Requires nu(h) == s.
std::variant<StarDecomposition, Diagnostic> stability_decompose(const Family& h, int s);

// Unconditional codegree-split bound:
//   co_p(H) <= (sk)^p (C(n,k-1) - |K_{sk+1}(H)|) + (n-k+1)^p |K_{sk+1}(H)| + slack.
bool check_shadow_counting_bound(const Family& h, int s, int p, const Count& slack = Count(0));
Count shadow_counting_bound_rhs(const Family& h, int s, int p);

// Verifier: parts partition the edges, every part sits inside the star of its
// center, at most s centers.
bool decomposition_valid(const Family& h, int s, const StarDecomposition& d);

}  // namespace sunflower
