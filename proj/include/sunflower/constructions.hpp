#pragma once

#include "sunflower/bigint.hpp"
#include "sunflower/family.hpp"

namespace sunflower {

// Parameters of the window family A_{n,k,s,i} = { F : |F meet [i*s+i-1]| >= i }.
struct ExtremalSpec {
  int n = 1;
  int k = 1;
  int s = 1;
  int i = 1;

  int window() const { return i * s + i - 1; }
  // The window no longer fits inside [n]; the nu = s identity can fail there.
  bool degenerate() const { return window() > n; }
};

// All k-sets meeting the window in >= i elements.
Family build_A(const ExtremalSpec& spec);

// H_{n,k,s} = A_{n,k,s,1}: all k-sets meeting [s].
Family build_H(int n, int k, int s);

// |A_{n,k,s,i}| without materializing the family (convolution over the window).
Count size_A(const ExtremalSpec& spec);

// co_p(H_{n,k,s}) closed form from the two-level codegree profile:
// (k-1)-sets meeting [s] have codegree n-k+1, the others have codegree s.
// Accepts s = 0 (empty family) so the k = 3 recurrence can bottom out.
Count co_norm_H_closed(int n, int k, int s, int p);

// Sunflower count for H_{n,k,s}, same profile with C(d, l) in place of d^p.
Count sunflower_count_H_closed(int n, int k, int s, int l);

// Closed forms for A_{n,k,s,k}, the complete family on the window
// [min(k*s+k-1, n)]; used by threshold scans.
Count size_Ak_closed(int n, int k, int s);
Count co_norm_Ak_closed(int n, int k, int s, int p);
Count sunflower_count_Ak_closed(int n, int k, int s, int l);

struct ReferenceBounds {
  Count ekr;  // max intersecting family size
  Count hm;   // max nontrivial intersecting family size
};

// Requires n >= 2k.
ReferenceBounds reference_bounds(int n, int k);

}  // namespace sunflower
