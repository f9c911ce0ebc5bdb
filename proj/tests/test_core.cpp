#include "doctest.h"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sunflower/binomial.hpp"
#include "sunflower/constructions.hpp"
#include "sunflower/core.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/family.hpp"
#include "sunflower/matching.hpp"

using namespace sunflower;

namespace {

Family three_edges() {
  return Family::make_labels(5, 3, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}});
}

Family random_family(int n, int k, double q, std::mt19937_64& rng) {
  std::vector<EdgeSet> universe;
  oracle::all_subsets(n, k, 1, EdgeSet(), universe);
  std::vector<EdgeSet> edges;
  for (EdgeSet e : universe)
    if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < q) edges.push_back(e);
  return Family::make(n, k, std::move(edges));
}

}  // namespace

TEST_CASE("EdgeSet lexicographic order") {
  CHECK(EdgeSet::of({1, 5}) < EdgeSet::of({2, 3}));
  CHECK(EdgeSet::of({1, 2}) < EdgeSet::of({1, 3}));
  CHECK(EdgeSet::of({1, 2}) < EdgeSet::of({1, 2, 3}));
  CHECK(!(EdgeSet::of({1, 2, 3}) < EdgeSet::of({1, 2})));
  CHECK(EdgeSet::of({1, 2, 3}) < EdgeSet::of({1, 4}));
  CHECK(!(EdgeSet::of({2, 3}) < EdgeSet::of({2, 3})));
}

TEST_CASE("family text format round trip and canonicalization") {
  std::istringstream in("# comment\n5 3\n3 2 1\n\n1 2 4\n# another\n3 4 5\n");
  Family f = read_family(in);
  CHECK(f == three_edges());
  std::string text = to_text(f);
  std::istringstream again(text);
  CHECK(read_family(again) == f);
  CHECK(text.substr(0, 4) == "5 3\n");
}

TEST_CASE("family parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      read_family(in);
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(e.line() == line);
    }
  };
  expect_error("5 3\n1 2 2\n", 2);              // duplicate vertex inside an edge
  expect_error("5 3\n1 2 3\n1 2\n", 3);         // wrong arity
  expect_error("5 3\n1 2 9\n", 2);              // label out of range
  expect_error("5 3\n1 2 3\n2 1 3\n", 3);       // duplicate edge
  expect_error("x y\n", 1);                     // bad header
  expect_error("# only a comment\n", 1);        // missing header
}

TEST_CASE("codegree: spec examples") {
  Family h = three_edges();
  CHECK(codegree(h, EdgeSet::of({1, 2})) == 2);
  CHECK(codegree(h, EdgeSet::of({4, 5})) == 1);
  CHECK(codegree(Family::empty(6, 3), EdgeSet::of({2, 5})) == 0);
  CHECK_THROWS_AS(codegree(h, EdgeSet::of({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("codegree_table matches superset-scan oracle") {
  Family h = three_edges();
  CodegreeTable table = codegree_table(h);
  for (const auto& [mask, expected] : oracle::codegree_table_scan(h))
    CHECK(table.at(EdgeSet::from_mask(mask)) == expected);
  CHECK(table.at(EdgeSet::of({1, 5})) == 0);

  Family star = build_H(5, 3, 1);
  CodegreeTable star_table = codegree_table(star);
  for (int x = 2; x <= 5; ++x) CHECK(star_table.at(EdgeSet::of({1, x})) == 3);
  CHECK(star_table.at(EdgeSet::of({2, 3})) == 1);

  CHECK(codegree_table(Family::empty(4, 2)).nonzero().empty());
  CHECK_THROWS_AS(codegree_table(Family::make_labels(3, 1, {{1}})), std::invalid_argument);
}

TEST_CASE("co_norm: spec examples and conventions") {
  CHECK(co_norm(three_edges(), 2) == Count(11));
  CHECK(co_norm(three_edges(), 1) == Count(9));  // co_1 = k|H|
  CHECK(co_norm(build_H(6, 3, 1), 2) == Count(90));
  CHECK(co_norm(three_edges(), 0) == binomial(5, 2));  // 0^0 = 1
  CHECK_THROWS_AS(co_norm(three_edges(), -1), std::invalid_argument);
}

TEST_CASE("sunflower_count: spec examples") {
  CHECK(sunflower_count(three_edges(), 2) == Count(1));
  CHECK(sunflower_count(build_H(6, 3, 1), 2) == Count(30));
  CHECK(sunflower_count(three_edges(), 4) == Count(0));  // l beyond max codegree
  CHECK_THROWS_AS(sunflower_count(three_edges(), 1), std::invalid_argument);
}

TEST_CASE("sunflower_count equals brute-force enumeration on small random families") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 60; ++rep) {
    int k = 2 + static_cast<int>(rng() % 2);
    int n = k + 2 + static_cast<int>(rng() % 4);
    Family h = random_family(n, k, 0.3, rng);
    if (h.size() > 12) continue;
    for (int l = 2; l <= 3; ++l) {
      CHECK(sunflower_count(h, l) == Count(oracle::sunflower_bruteforce(h, l)));
    }
  }
}

TEST_CASE("high_codegree_family: spec examples and antitone property") {
  Family star = build_H(5, 3, 1);
  Family k3 = high_codegree_family(star, 3);
  CHECK(k3 == Family::make_labels(5, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  CHECK(high_codegree_family(star, 4).size() == 0);

  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    Family h = random_family(6, 3, 0.4, rng);
    // d = 1 gives the shadow
    Family shadow = high_codegree_family(h, 1);
    CodegreeTable table = codegree_table(h);
    for (const auto& [key, d] : table.nonzero()) CHECK(shadow.contains(key));
    for (int d = 1; d + 1 <= 4; ++d) {
      Family a = high_codegree_family(h, d);
      Family b = high_codegree_family(h, d + 1);
      for (EdgeSet e : b.edges) CHECK(a.contains(e));
    }
  }
}

TEST_CASE("restrict_avoid: spec examples and composition") {
  Family h = Family::make_labels(5, 3, {{1, 2, 3}, {3, 4, 5}});
  CHECK(restrict_avoid(h, EdgeSet::of({1})) == Family::make_labels(5, 3, {{3, 4, 5}}));
  CHECK(restrict_avoid(h, EdgeSet()) == h);

  Family star_cluster = build_H(9, 3, 2);
  CHECK(restrict_avoid(star_cluster, EdgeSet::of({1, 2})).size() == 0);

  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    Family f = random_family(7, 3, 0.4, rng);
    int i = 1 + static_cast<int>(rng() % 7);
    int j = 1 + static_cast<int>(rng() % 7);
    CHECK(restrict_avoid(restrict_avoid(f, EdgeSet::of({i})), EdgeSet().with(j)) ==
          restrict_avoid(f, EdgeSet().with(i).with(j)));
  }
}

TEST_CASE("max_codegree and trivial_center") {
  CHECK(max_codegree(build_H(7, 3, 2)) == 5);
  CHECK(max_codegree(Family::empty(5, 3)) == 0);
  CHECK(max_codegree(Family::make_labels(5, 3, {{2, 3, 4}})) == 1);

  CHECK(trivial_center(build_H(6, 3, 1)) == 1);
  CHECK(!trivial_center(Family::make_labels(6, 3, {{1, 2, 3}, {4, 5, 6}})));
  CHECK(trivial_center(Family::make_labels(7, 3, {{2, 3, 4}, {2, 5, 6}, {2, 3, 7}})) == 2);
  CHECK(trivial_center(Family::empty(4, 2)) == 1);  // vacuously a star
}

TEST_CASE("64-vertex ground set boundary") {
  Family h = Family::make_labels(64, 2, {{1, 64}, {63, 64}});
  CHECK(codegree(h, EdgeSet::of({64})) == 2);
  CHECK(matching_number(h) == 1);
  CHECK(restrict_avoid(h, EdgeSet::of({64})).size() == 0);
  CHECK_THROWS_AS(Family::make_labels(65, 2, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(EdgeSet::of({65}), std::invalid_argument);
}

TEST_CASE("handshake identity co_1 = k|H| on random families") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 50; ++rep) {
    int k = 2 + static_cast<int>(rng() % 2);
    Family h = random_family(k + 3 + static_cast<int>(rng() % 4), k, 0.4, rng);
    CHECK(co_norm(h, 1) == Count(h.size()) * static_cast<std::uint64_t>(k));
    // co_2 = 2 N(S_2) + k|H|
    CHECK(co_norm(h, 2) ==
          sunflower_count(h, 2) * 2u + Count(h.size()) * static_cast<std::uint64_t>(k));
  }
}

TEST_CASE("isomorphic: spec examples") {
  Family star1 = build_H(6, 3, 1);
  // star at 3: relabel 1 <-> 3
  std::vector<std::vector<int>> edges;
  for (EdgeSet e : star1.edges) {
    std::vector<int> v;
    for (int x : e.labels()) v.push_back(x == 1 ? 3 : (x == 3 ? 1 : x));
    edges.push_back(v);
  }
  Family star3 = Family::make_labels(6, 3, edges);
  CHECK(isomorphic(star1, star3));

  Family smaller = Family::make(6, 3, std::vector<EdgeSet>(star1.edges.begin(),
                                                           star1.edges.end() - 1));
  CHECK(!isomorphic(star1, smaller));

  CHECK(!isomorphic(Family::make_labels(4, 2, {{1, 2}, {2, 3}}),
                    Family::make_labels(4, 2, {{1, 2}, {3, 4}})));
  CHECK_THROWS_AS(isomorphic(Family::empty(13, 3), Family::empty(13, 3)), guard_error);
}

TEST_CASE("isomorphic distinguishes families with identical degree profiles") {
  // 6-cycle vs two triangles: both 2-regular with 6 edges
  Family cycle = Family::make_labels(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  Family triangles = Family::make_labels(6, 2, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
  CHECK(!isomorphic(cycle, triangles));
  CHECK(isomorphic(cycle, Family::make_labels(6, 2, {{1, 3}, {3, 5}, {2, 5}, {2, 6}, {4, 6},
                                                     {1, 4}})));  // relabeled 6-cycle
  // same size and nu, different codegree profile
  CHECK(!isomorphic(build_H(6, 3, 1), build_A({6, 3, 1, 2})));
}

TEST_CASE("isomorphic behaves like an equivalence relation with matching invariants") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 25; ++rep) {
    int k = 2 + static_cast<int>(rng() % 2);
    int n = k + 2 + static_cast<int>(rng() % 3);
    Family h = random_family(n, k, 0.35, rng);
    CHECK(isomorphic(h, h));

    std::vector<int> perm(n + 1);
    for (int v = 1; v <= n; ++v) perm[v] = v;
    for (int v = n; v > 1; --v) std::swap(perm[v], perm[1 + static_cast<int>(rng() % v)]);
    std::vector<std::vector<int>> rel;
    for (EdgeSet e : h.edges) {
      std::vector<int> mapped;
      for (int x : e.labels()) mapped.push_back(perm[x]);
      rel.push_back(mapped);
    }
    Family g = Family::make_labels(n, k, rel);
    CHECK(isomorphic(h, g));
    CHECK(isomorphic(g, h));
    CHECK(h.size() == g.size());
    for (int p = 0; p <= 4; ++p) CHECK(co_norm(h, p) == co_norm(g, p));
    CHECK(sunflower_count(h, 2) == sunflower_count(g, 2));
    CHECK(sunflower_count(h, 3) == sunflower_count(g, 3));
  }
}
