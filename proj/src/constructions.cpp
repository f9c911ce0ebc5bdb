#include "sunflower/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "sunflower/binomial.hpp"

namespace sunflower {

namespace {

void require_spec(const ExtremalSpec& spec) {
  if (spec.s < 1) throw std::invalid_argument("extremal spec: s must be >= 1");
  if (spec.i < 1 || spec.i > spec.k)
    throw std::invalid_argument("extremal spec: i must be in [1,k]");
  if (spec.k < 1 || spec.k > spec.n)
    throw std::invalid_argument("extremal spec: need 1 <= k <= n");
}

void enumerate_ksets(int n, int k, int next, EdgeSet prefix, std::vector<EdgeSet>& out) {
  if (prefix.size() == k) {
    out.push_back(prefix);
    return;
  }
  for (int v = next; v <= n - (k - prefix.size()) + 1; ++v)
    enumerate_ksets(n, k, v + 1, prefix.with(v), out);
}

}  // namespace

Family build_A(const ExtremalSpec& spec) {
  require_spec(spec);
  int w = std::min(spec.window(), spec.n);
  std::uint64_t window_mask = (w == 64) ? ~0ull : ((1ull << w) - 1);
  std::vector<EdgeSet> all;
  enumerate_ksets(spec.n, spec.k, 1, EdgeSet(), all);
  std::vector<EdgeSet> keep;
  for (EdgeSet f : all)
    if (std::popcount(f.mask() & window_mask) >= spec.i) keep.push_back(f);
  return Family::make(spec.n, spec.k, std::move(keep));
}

Family build_H(int n, int k, int s) { return build_A({n, k, s, 1}); }

Count size_A(const ExtremalSpec& spec) {
  require_spec(spec);
  int w = std::min(spec.window(), spec.n);
  Count out(0);
  for (int j = spec.i; j <= spec.k; ++j)
    out += binomial(w, j) * binomial(spec.n - w, spec.k - j);
  return out;
}

Count co_norm_H_closed(int n, int k, int s, int p) {
  if (k < 2 || n < k) throw std::invalid_argument("co_norm_H_closed: need 2 <= k <= n");
  if (s < 0) throw std::invalid_argument("co_norm_H_closed: s must be >= 0");
  if (p < 0) throw std::invalid_argument("co_norm_H_closed: p must be >= 0");
  Count meeting = binomial(n, k - 1) - binomial(n - s, k - 1);
  Count rest = binomial(n - s, k - 1);
  return meeting * pow_count(static_cast<std::uint64_t>(n - k + 1), static_cast<unsigned>(p)) +
         rest * pow_count(static_cast<std::uint64_t>(s), static_cast<unsigned>(p));
}

Count sunflower_count_H_closed(int n, int k, int s, int l) {
  if (k < 2 || n < k) throw std::invalid_argument("sunflower_count_H_closed: need 2 <= k <= n");
  if (s < 0) throw std::invalid_argument("sunflower_count_H_closed: s must be >= 0");
  if (l < 2) throw std::invalid_argument("sunflower_count_H_closed: l must be >= 2");
  Count meeting = binomial(n, k - 1) - binomial(n - s, k - 1);
  Count rest = binomial(n - s, k - 1);
  return meeting * binomial(n - k + 1, l) + rest * binomial(s, l);
}

Count size_Ak_closed(int n, int k, int s) {
  int w = std::min(k * s + k - 1, n);
  return binomial(w, k);
}

Count co_norm_Ak_closed(int n, int k, int s, int p) {
  if (p < 1) throw std::invalid_argument("co_norm_Ak_closed: p must be >= 1");
  int w = std::min(k * s + k - 1, n);
  return binomial(w, k - 1) * pow_count(static_cast<std::uint64_t>(w - k + 1),
                                        static_cast<unsigned>(p));
}

Count sunflower_count_Ak_closed(int n, int k, int s, int l) {
  if (l < 2) throw std::invalid_argument("sunflower_count_Ak_closed: l must be >= 2");
  int w = std::min(k * s + k - 1, n);
  return binomial(w, k - 1) * binomial(w - k + 1, l);
}

ReferenceBounds reference_bounds(int n, int k) {
  if (n < 2 * k) throw std::invalid_argument("reference_bounds: need n >= 2k");
  ReferenceBounds out;
  out.ekr = binomial(n - 1, k - 1);
  out.hm = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + Count(1);
  return out;
}

}  // namespace sunflower
