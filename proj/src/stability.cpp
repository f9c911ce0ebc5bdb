#include "sunflower/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "sunflower/binomial.hpp"
#include "sunflower/core.hpp"
#include "sunflower/matching.hpp"

namespace sunflower {

namespace {

std::string edge_text(EdgeSet e) {
  std::string out = "{";
  bool first = true;
  for (int v : e.labels()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Assign every edge to its smallest-label center.
StarDecomposition assemble(const Family& h, std::vector<int> centers) {
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  std::vector<std::vector<EdgeSet>> buckets(centers.size());
  for (EdgeSet e : h.edges) {
    for (std::size_t i = 0; i < centers.size(); ++i) {
      if (e.contains(centers[i])) {
        buckets[i].push_back(e);
        break;
      }
    }
  }
  StarDecomposition out;
  out.centers = std::move(centers);
  for (auto& bucket : buckets) out.parts.push_back(Family::make(h.n, h.k, std::move(bucket)));
  return out;
}

}  // namespace

std::optional<StarDecomposition> stars_cover(const Family& h, int s) {
  auto cover = cover_at_most(h, s);
  if (!cover) return std::nullopt;
  return assemble(h, *cover);
}

std::variant<StarDecomposition, Diagnostic> stability_decompose(const Family& h, int s) {
  if (s < 0) throw std::invalid_argument("stability_decompose: s must be >= 0");
  if (matching_number(h) != s)
    throw std::invalid_argument("stability_decompose: family does not have matching number " +
                                std::to_string(s));
  if (s == 0) return StarDecomposition{};  // nu = 0 means no edges

  Matching base = maximum_matching(h);
  std::vector<int> centers;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::uint64_t others = 0;
    for (std::size_t j = 0; j < base.size(); ++j)
      if (j != i) others |= base[j].mask();
    std::vector<EdgeSet> part;
    for (EdgeSet e : h.edges)
      if (e.intersects(base[i]) && (e.mask() & others) == 0) part.push_back(e);
    if (part.empty()) continue;
    Family b = Family::make(h.n, h.k, std::move(part));
    auto center = trivial_center(b);
    if (!center)
      return Diagnostic{Diagnostic::Step::nontrivial_part,
                        "B_" + std::to_string(i + 1) + " (around " + edge_text(base[i]) +
                            ") has no common vertex"};
    centers.push_back(*center);
  }

  std::uint64_t center_mask = 0;
  for (int c : centers) center_mask |= 1ull << (c - 1);
  for (EdgeSet e : h.edges)
    if ((e.mask() & center_mask) == 0)
      return Diagnostic{Diagnostic::Step::uncovered_edge,
                        "edge " + edge_text(e) + " avoids every extracted center"};
  return assemble(h, std::move(centers));
}

Count shadow_counting_bound_rhs(const Family& h, int s, int p) {
  if (h.k < 2) throw std::invalid_argument("shadow bound: need k >= 2");
  if (s < 0 || p < 1) throw std::invalid_argument("shadow bound: need s >= 0, p >= 1");
  Count shadow_size(high_codegree_family(h, s * h.k + 1).size());
  Count low = binomial(h.n, h.k - 1) - shadow_size;
  return low * pow_count(static_cast<std::uint64_t>(s) * h.k, static_cast<unsigned>(p)) +
         shadow_size *
             pow_count(static_cast<std::uint64_t>(h.n - h.k + 1), static_cast<unsigned>(p));
}

bool check_shadow_counting_bound(const Family& h, int s, int p, const Count& slack) {
  return co_norm(h, p) <= shadow_counting_bound_rhs(h, s, p) + slack;
}

bool decomposition_valid(const Family& h, int s, const StarDecomposition& d) {
  if (static_cast<int>(d.centers.size()) > s) return false;
  if (d.centers.size() != d.parts.size()) return false;
  std::size_t total = 0;
  std::vector<EdgeSet> seen;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    for (EdgeSet e : d.parts[i].edges) {
      if (!e.contains(d.centers[i])) return false;
      if (!h.contains(e)) return false;
      seen.push_back(e);
    }
    total += d.parts[i].size();
  }
  if (total != h.size()) return false;
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace sunflower
