#include "doctest.h"

#include "oracles.hpp"
#include "sunflower/binomial.hpp"
#include "sunflower/constructions.hpp"
#include "sunflower/core.hpp"

using namespace sunflower;

TEST_CASE("build_A: spec examples") {
  Family star = build_A({5, 3, 1, 1});
  CHECK(star.size() == 6);
  CHECK(star == build_H(5, 3, 1));

  Family clique = build_A({9, 3, 2, 3});
  CHECK(clique.size() == 56);
  for (EdgeSet e : clique.edges) CHECK(!e.contains(9));

  CHECK(build_A({4, 2, 1, 1}) == Family::make_labels(4, 2, {{1, 2}, {1, 3}, {1, 4}}));
}

TEST_CASE("build_H sizes") {
  CHECK(build_H(6, 3, 1).size() == 10);
  CHECK(build_H(5, 2, 2).size() == 7);
  CHECK(build_H(5, 3, 5).size() == 10);  // s = n: complete family
}

TEST_CASE("size_A equals enumeration") {
  CHECK(size_A({6, 3, 1, 1}) == Count(10));
  CHECK(size_A({9, 3, 2, 3}) == Count(56));
  CHECK(size_A({7, 3, 2, 2}) == Count(30));
  for (int n = 2; n <= 9; ++n)
    for (int k = 2; k <= std::min(3, n); ++k)
      for (int s = 1; s <= 3; ++s)
        for (int i = 1; i <= k; ++i)
          CHECK(size_A({n, k, s, i}) == Count(build_A({n, k, s, i}).size()));
}

TEST_CASE("degenerate window flag") {
  CHECK(ExtremalSpec{5, 3, 2, 3}.degenerate());  // window [8] exceeds [5]
  CHECK(!ExtremalSpec{9, 3, 2, 3}.degenerate());
  // degenerate build still returns all k-sets meeting [n] in >= i points
  CHECK(build_A({5, 3, 2, 3}).size() == 10);  // every 3-set of [5]
}

TEST_CASE("co_norm_H_closed: examples and full consistency with enumeration") {
  CHECK(co_norm_H_closed(6, 3, 1, 2) == Count(90));
  CHECK(co_norm_H_closed(13, 3, 1, 2) == Count(1518));
  // co_1 = k (C(n,k) - C(n-s,k))
  for (int n = 3; n <= 10; ++n)
    for (int s = 1; s <= 3; ++s)
      CHECK(co_norm_H_closed(n, 3, s, 1) ==
            (binomial(n, 3) - binomial(n - s, 3)) * 3u);
  for (int k = 2; k <= 3; ++k)
    for (int n = k; n <= 10; ++n)
      for (int s = 1; s <= 3; ++s)
        for (int p = 0; p <= 4; ++p)
          CHECK(co_norm_H_closed(n, k, s, p) == co_norm(build_H(n, k, s), p));
}

TEST_CASE("sunflower_count_H_closed: examples and consistency") {
  CHECK(sunflower_count_H_closed(6, 3, 1, 2) == Count(30));
  CHECK(sunflower_count_H_closed(7, 3, 2, 2) == Count(120));
  CHECK(sunflower_count_H_closed(13, 3, 1, 2) == Count(660));
  CHECK(sunflower_count_H_closed(9, 3, 2, 8) == Count(0));  // l beyond both profiles
  for (int k = 2; k <= 3; ++k)
    for (int n = k; n <= 10; ++n)
      for (int s = 1; s <= 3; ++s)
        for (int l = 2; l <= 3; ++l)
          CHECK(sunflower_count_H_closed(n, k, s, l) == sunflower_count(build_H(n, k, s), l));
}

TEST_CASE("closed form satisfies the k=3 recurrence") {
  for (int n = 4; n <= 30; ++n)
    for (int s = 1; s <= std::min(5, n - 3); ++s)
      for (int p = 0; p <= 6; ++p) {
        Count rhs = Count(static_cast<std::uint64_t>(n - 1)) *
                    pow_count(static_cast<std::uint64_t>(n - 2), static_cast<unsigned>(p));
        for (int i = 0; i <= p; ++i)
          rhs += binomial(p, i) * co_norm_H_closed(n - 1, 3, s - 1, i);
        CHECK(co_norm_H_closed(n, 3, s, p) == rhs);
      }
}

TEST_CASE("closed form dominates the k=3 lower bound") {
  for (int n = 4; n <= 20; ++n)
    for (int s = 1; s <= std::min(5, n - 1); ++s)
      for (int p = 1; p <= 4; ++p) {
        Count mid = (binomial(n, 2) - binomial(n - s, 2)) *
                    pow_count(static_cast<std::uint64_t>(n - 2), static_cast<unsigned>(p));
        Count low = Count(static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(n - s)) *
                    pow_count(static_cast<std::uint64_t>(n - 2), static_cast<unsigned>(p));
        CHECK(co_norm_H_closed(n, 3, s, p) >= mid);
        CHECK(mid >= low);
      }
}

TEST_CASE("Ak closed forms against enumeration") {
  for (int k = 2; k <= 3; ++k)
    for (int s = 1; s <= 2; ++s)
      for (int n = k; n <= 9; ++n) {
        Family ak = build_A({n, k, s, k});
        CHECK(size_Ak_closed(n, k, s) == Count(ak.size()));
        CHECK(co_norm_Ak_closed(n, k, s, 2) == co_norm(ak, 2));
        CHECK(sunflower_count_Ak_closed(n, k, s, 2) == sunflower_count(ak, 2));
      }
}

TEST_CASE("reference_bounds: spec examples") {
  ReferenceBounds b63 = reference_bounds(6, 3);
  CHECK(b63.ekr == Count(10));
  CHECK(b63.hm == Count(10));
  ReferenceBounds b83 = reference_bounds(8, 3);
  CHECK(b83.ekr == Count(21));
  CHECK(b83.hm == Count(16));
  CHECK(reference_bounds(6, 3).ekr == binomial(5, 2));
  CHECK_THROWS_AS(reference_bounds(5, 3), std::invalid_argument);
}
