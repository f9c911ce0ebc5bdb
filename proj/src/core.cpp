#include "sunflower/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "sunflower/binomial.hpp"
#include "sunflower/errors.hpp"

namespace sunflower {

namespace {

void require_shadow_key(const Family& h, EdgeSet e) {
  if (e.size() != h.k - 1)
    throw std::invalid_argument("codegree key must have size k-1 = " + std::to_string(h.k - 1) +
                                ", got " + std::to_string(e.size()));
  std::uint64_t ground = (h.n == 64) ? ~0ull : ((1ull << h.n) - 1);
  if ((e.mask() & ~ground) != 0)
    throw std::invalid_argument("codegree key uses a vertex outside [1,n]");
}

void require_k_at_least_2(const Family& h, const char* op) {
  if (h.k < 2)
    throw std::invalid_argument(std::string(op) + " is undefined for k = 1 families");
}

}  // namespace

int CodegreeTable::at(EdgeSet key) const {
  if (key.size() != k_ - 1)
    throw std::invalid_argument("codegree key must have size k-1");
  auto it = map_.find(key.mask());
  return it == map_.end() ? 0 : it->second;
}

int codegree(const Family& h, EdgeSet e) {
  require_shadow_key(h, e);
  int count = 0;
  for (EdgeSet f : h.edges)
    if (e.subset_of(f)) ++count;
  return count;
}

CodegreeTable codegree_table(const Family& h) {
  require_k_at_least_2(h, "codegree_table");
  CodegreeTable table(h.n, h.k);
  for (EdgeSet f : h.edges) {
    for (int v : f.labels()) ++table.map_[f.without(v).mask()];
  }
  table.nonzero_.reserve(table.map_.size());
  for (const auto& [mask, d] : table.map_)
    table.nonzero_.emplace_back(EdgeSet::from_mask(mask), d);
  std::sort(table.nonzero_.begin(), table.nonzero_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return table;
}

Count co_norm(const Family& h, int p) {
  require_k_at_least_2(h, "co_norm");
  if (p < 0) throw std::invalid_argument("co_norm exponent must be >= 0");
  if (p == 0) return binomial(h.n, h.k - 1);  // 0^0 = 1: every (k-1)-set contributes
  Count out(0);
  CodegreeTable table = codegree_table(h);
  for (const auto& [key, d] : table.nonzero())
    out += pow_count(static_cast<std::uint64_t>(d), static_cast<unsigned>(p));
  return out;
}

Count sunflower_count(const Family& h, int l) {
  require_k_at_least_2(h, "sunflower_count");
  if (l < 2) throw std::invalid_argument("sunflower petal count must be >= 2");
  Count out(0);
  CodegreeTable table = codegree_table(h);
  for (const auto& [key, d] : table.nonzero()) out += binomial(d, l);
  return out;
}

Family high_codegree_family(const Family& h, int d) {
  require_k_at_least_2(h, "high_codegree_family");
  if (d < 1) throw std::invalid_argument("codegree threshold must be >= 1");
  std::vector<EdgeSet> keep;
  CodegreeTable table = codegree_table(h);
  for (const auto& [key, deg] : table.nonzero())
    if (deg >= d) keep.push_back(key);
  return Family::make(h.n, h.k - 1, std::move(keep));
}

Family restrict_avoid(const Family& h, VertexSet avoid) {
  std::uint64_t ground = (h.n == 64) ? ~0ull : ((1ull << h.n) - 1);
  if ((avoid.mask() & ~ground) != 0)
    throw std::invalid_argument("avoid set uses a vertex outside [1,n]");
  std::vector<EdgeSet> keep;
  for (EdgeSet f : h.edges)
    if (!f.intersects(avoid)) keep.push_back(f);
  return Family::make(h.n, h.k, std::move(keep));
}

int max_codegree(const Family& h) {
  require_k_at_least_2(h, "max_codegree");
  int best = 0;
  CodegreeTable table = codegree_table(h);
  for (const auto& [key, d] : table.nonzero()) best = std::max(best, d);
  return best;
}

std::optional<int> trivial_center(const Family& h) {
  if (h.edges.empty()) return 1;  // vacuously a star
  std::uint64_t common = ~0ull;
  for (EdgeSet f : h.edges) common &= f.mask();
  if (common == 0) return std::nullopt;
  return EdgeSet::from_mask(common).min_label();
}

namespace {

// Per-vertex refinement signature: degree plus the sorted degree profiles of
// the incident edges. Coarse but cheap; the backtracking below is exact.
std::vector<std::vector<int>> vertex_signatures(const Family& h) {
  std::vector<int> deg(h.n + 1, 0);
  for (EdgeSet f : h.edges)
    for (int v : f.labels()) ++deg[v];
  std::vector<std::vector<int>> sig(h.n + 1);
  for (int v = 1; v <= h.n; ++v) sig[v].push_back(deg[v]);
  for (EdgeSet f : h.edges) {
    std::vector<int> profile;
    for (int v : f.labels()) profile.push_back(deg[v]);
    std::sort(profile.begin(), profile.end());
    for (int v : f.labels()) sig[v].insert(sig[v].end(), profile.begin(), profile.end());
  }
  for (int v = 1; v <= h.n; ++v)
    std::sort(sig[v].begin() + 1, sig[v].end());
  return sig;
}

struct IsoSearch {
  const Family* h1;
  const Family* h2;
  std::unordered_set<std::uint64_t> target;  // h2 edge masks
  std::vector<std::vector<int>> candidates;  // per h1 vertex
  std::vector<int> image;                    // h1 vertex -> h2 vertex, 0 = unset
  std::uint64_t used = 0;

  bool extend(int v) {
    if (v > h1->n) return true;
    for (int w : candidates[v]) {
      std::uint64_t bit = 1ull << (w - 1);
      if (used & bit) continue;
      image[v] = w;
      used |= bit;
      if (consistent(v) && extend(v + 1)) return true;
      image[v] = 0;
      used &= ~bit;
    }
    return false;
  }

  // Every h1 edge fully inside the mapped prefix must land on an h2 edge.
  bool consistent(int v) const {
    for (EdgeSet f : h1->edges) {
      if (!f.contains(v)) continue;
      bool complete = true;
      std::uint64_t mapped = 0;
      for (int u : f.labels()) {
        if (image[u] == 0) {
          complete = false;
          break;
        }
        mapped |= 1ull << (image[u] - 1);
      }
      if (complete && target.find(mapped) == target.end()) return false;
    }
    return true;
  }
};

}  // namespace

bool isomorphic(const Family& h1, const Family& h2) {
  if (h1.n != h2.n || h1.k != h2.k) return false;
  if (h1.edges.size() != h2.edges.size()) return false;
  if (h1.n > 12) throw guard_error("isomorphism queries are capped at n <= 12");
  if (h1.edges == h2.edges) return true;

  auto sig1 = vertex_signatures(h1);
  auto sig2 = vertex_signatures(h2);
  {
    auto s1 = sig1, s2 = sig2;
    std::sort(s1.begin() + 1, s1.end());
    std::sort(s2.begin() + 1, s2.end());
    if (s1 != s2) return false;
  }

  IsoSearch search;
  search.h1 = &h1;
  search.h2 = &h2;
  for (EdgeSet f : h2.edges) search.target.insert(f.mask());
  search.candidates.resize(h1.n + 1);
  for (int v = 1; v <= h1.n; ++v)
    for (int w = 1; w <= h2.n; ++w)
      if (sig1[v] == sig2[w]) search.candidates[v].push_back(w);
  search.image.assign(h1.n + 1, 0);
  return search.extend(1);
}

}  // namespace sunflower
