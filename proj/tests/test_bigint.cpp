#include "doctest.h"

#include <cstdint>
#include <random>
#include <stdexcept>

#include "sunflower/bigint.hpp"
#include "sunflower/binomial.hpp"

using sunflower::binom64;
using sunflower::binomial;
using sunflower::Count;
using sunflower::factorial;
using sunflower::pow64;
using sunflower::pow_count;

TEST_CASE("Count basic arithmetic agrees with u64 on random operands") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t a = rng() >> (rng() % 40);
    std::uint64_t b = rng() >> (rng() % 40);
    CHECK(Count(a) + Count(b) >= Count(a));
    if (a <= 0xffffffffull && b <= 0xffffffffull) {
      CHECK((Count(a) * Count(b)).to_u64() == a * b);
      CHECK((Count(a) + Count(b)).to_u64() == a + b);
    }
    if (a >= b) CHECK((Count(a) - Count(b)).to_u64() == a - b);
    CHECK((Count(a) <=> Count(b)) == (a <=> b));
  }
}

TEST_CASE("Count decimal round trip") {
  CHECK(Count(0).str() == "0");
  CHECK(Count(1234567890123456789ull).str() == "1234567890123456789");
  Count big = Count::from_decimal("340282366920938463463374607431768211456");  // 2^128
  CHECK(big.str() == "340282366920938463463374607431768211456");
  Count two128 = pow_count(2, 128);
  CHECK(two128 == big);
  CHECK(!big.fits_u64());
  CHECK_THROWS_AS((void)big.to_u64(), std::overflow_error);
}

TEST_CASE("Count subtraction underflow is loud") {
  CHECK_THROWS_AS(Count(3) - Count(4), std::underflow_error);
}

TEST_CASE("binomial small table") {
  CHECK(binomial(0, 0) == Count(1));
  CHECK(binomial(5, 2) == Count(10));
  CHECK(binomial(6, 3) == Count(20));
  CHECK(binomial(12, 6) == Count(924));
  CHECK(binomial(4, 7) == Count(0));
  CHECK(binomial(4, -1) == Count(0));
  CHECK(binomial(-2, 1) == Count(0));
  CHECK(binomial(-2, 0) == Count(0));
}

TEST_CASE("binomial matches Pascal recurrence") {
  for (int n = 1; n <= 40; ++n)
    for (int r = 0; r <= n; ++r)
      CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST_CASE("binomial big value") {
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
  CHECK(factorial(25).str() == "15511210043330985984000000");
}

TEST_CASE("pow conventions") {
  CHECK(pow_count(0, 0) == Count(1));
  CHECK(pow_count(0, 5) == Count(0));
  CHECK(pow_count(7, 0) == Count(1));
  CHECK(pow_count(3, 4) == Count(81));
  CHECK(pow_count(10, 24).str() == "1" + std::string(24, '0'));
  CHECK(pow64(2, 10) == 1024);
  CHECK(binom64(20, 10) == 184756);
}
