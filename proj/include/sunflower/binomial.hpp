#pragma once

#include <cstdint>

#include "sunflower/bigint.hpp"

namespace sunflower {

// C(n, r) with the convention used throughout: 0 whenever r < 0, r > n or n < 0.
Count binomial(long long n, long long r);

// base^exp with 0^0 = 1 (the convention that makes co_0 = C(n, k-1)).
Count pow_count(std::uint64_t base, unsigned exp);

Count factorial(unsigned n);

// Machine-word fast paths for search inner loops; both throw guard_error on overflow.
std::uint64_t binom64(long long n, long long r);
std::uint64_t pow64(std::uint64_t base, unsigned exp);

}  // namespace sunflower
