#include "sunflower/binomial.hpp"

#include <limits>
#include <stdexcept>

#include "sunflower/errors.hpp"

namespace sunflower {

Count binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return Count(0);
  if (r > n - r) r = n - r;
  Count out(1);
  for (long long i = 1; i <= r; ++i) {
    // staying integral at every step: out is C(n, i) after dividing by i
    out *= static_cast<std::uint64_t>(n - r + i);
    if (i > std::numeric_limits<std::uint32_t>::max())
      throw guard_error("binomial: r too large for single-limb division");
    std::uint32_t rem = out.divmod_u32(static_cast<std::uint32_t>(i));
    if (rem != 0) throw std::logic_error("binomial: non-exact division");
  }
  return out;
}

Count pow_count(std::uint64_t base, unsigned exp) {
  Count out(1);
  Count b(base);
  while (exp > 0) {
    if (exp & 1u) out *= b;
    b *= b;
    exp >>= 1u;
  }
  return out;
}

Count factorial(unsigned n) {
  Count out(1);
  for (unsigned i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t binom64(long long n, long long r) {
  Count c = binomial(n, r);
  if (!c.fits_u64()) throw guard_error("binom64 overflow: C(" + std::to_string(n) + "," + std::to_string(r) + ")");
  return c.to_u64();
}

std::uint64_t pow64(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      throw guard_error("pow64 overflow");
    out *= base;
  }
  return out;
}

}  // namespace sunflower
