#include "sunflower/search.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "sunflower/binomial.hpp"
#include "sunflower/constructions.hpp"
#include "sunflower/core.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/matching.hpp"

namespace sunflower {

namespace {

constexpr int kWitnessCap = 16;
constexpr int kPatience = 50;
constexpr int kAddTries = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void enumerate_subsets(int n, int k, int next, std::uint64_t prefix, int size,
                       std::vector<std::uint64_t>& out) {
  if (size == k) {
    out.push_back(prefix);
    return;
  }
  for (int v = next; v <= n - (k - size) + 1; ++v)
    enumerate_subsets(n, k, v + 1, prefix | (1ull << (v - 1)), size + 1, out);
}

// All k-sets and (k-1)-sets of [n] in lexicographic order, with the incidence
// between them; shared by the exhaustive engine and the hill climber.
struct EdgeUniverse {
  int n, k;
  std::vector<std::uint64_t> edges;
  std::vector<std::uint64_t> shadows;
  std::vector<std::vector<int>> edge_shadows;  // per edge: its k shadow indices

  EdgeUniverse(int n_, int k_) : n(n_), k(k_) {
    enumerate_subsets(n, k, 1, 0, 0, edges);
    if (k >= 2) {
      enumerate_subsets(n, k - 1, 1, 0, 0, shadows);
    } else {
      shadows.push_back(0);  // the empty core; degree = family size
    }
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(shadows.size());
    for (std::size_t i = 0; i < shadows.size(); ++i) index[shadows[i]] = static_cast<int>(i);
    edge_shadows.resize(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      for (std::uint64_t m = edges[e]; m != 0; m &= m - 1) {
        std::uint64_t bit = m & (~m + 1);
        edge_shadows[e].push_back(index.at(edges[e] & ~bit));
      }
    }
  }
};

// Per-codegree objective contribution. size is handled as co_1 (= k|H|) and
// divided back out when reporting.
std::vector<std::uint64_t> objective_table(const Objective& obj, int max_degree) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) {
    switch (obj.kind) {
      case Objective::Kind::size:
        f[d] = static_cast<std::uint64_t>(d);
        break;
      case Objective::Kind::co_norm:
        f[d] = pow64(static_cast<std::uint64_t>(d), static_cast<unsigned>(obj.param));
        break;
      case Objective::Kind::sunflower:
        f[d] = binom64(d, obj.param);
        break;
    }
  }
  return f;
}

Count report_value(const Objective& obj, std::uint64_t raw, int k) {
  if (obj.kind == Objective::Kind::size) return Count(raw / static_cast<std::uint64_t>(k));
  return Count(raw);
}

// Is there a matching of size `need` among the given masks?
bool masks_have_matching(const std::vector<std::uint64_t>& masks, int need, int n, int k) {
  if (need <= 0) return true;
  if (static_cast<int>(masks.size()) < need) return false;
  struct Rec {
    const std::vector<std::uint64_t>& masks;
    int n, k;
    bool run(std::size_t from, std::uint64_t used, int need) const {
      if (need == 0) return true;
      int free_slots = (n - std::popcount(used)) / k;
      if (free_slots < need || static_cast<int>(masks.size() - from) < need) return false;
      for (std::size_t j = from; j < masks.size(); ++j) {
        if ((masks[j] & used) == 0 && run(j + 1, used | masks[j], need - 1)) return true;
      }
      return false;
    }
  };
  return Rec{masks, n, k}.run(0, 0, need);
}

// nu(current + e) <= s given nu(current) <= s: any (s+1)-matching must use e,
// so it exists iff the edges disjoint from e contain an s-matching.
bool addition_keeps_nu(const std::vector<std::uint64_t>& current, std::uint64_t e, int s, int n,
                       int k) {
  if (s <= 0) return false;
  std::vector<std::uint64_t> disjoint;
  disjoint.reserve(current.size());
  for (std::uint64_t m : current)
    if ((m & e) == 0) disjoint.push_back(m);
  return !masks_have_matching(disjoint, s, n, k);
}

Family family_from_masks(int n, int k, const std::vector<std::uint64_t>& masks) {
  std::vector<EdgeSet> edges;
  edges.reserve(masks.size());
  for (std::uint64_t m : masks) edges.push_back(EdgeSet::from_mask(m));
  return Family::make(n, k, std::move(edges));
}

bool family_lex_less(const Family& a, const Family& b) {
  return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(),
                                      b.edges.end());
}

struct ExhaustiveEngine {
  const EdgeUniverse& u;
  int s;
  std::vector<std::uint64_t> f;
  std::vector<int> deg_chosen, deg_possible;
  std::uint64_t val_chosen = 0, val_possible = 0;
  std::vector<std::uint64_t> chosen;
  std::uint64_t best = 0;
  std::uint64_t count = 0;
  std::vector<Family> witnesses;
  std::uint64_t nodes = 0;

  ExhaustiveEngine(const EdgeUniverse& universe, int s_, std::vector<std::uint64_t> table)
      : u(universe), s(s_), f(std::move(table)) {
    deg_chosen.assign(u.shadows.size(), 0);
    deg_possible.assign(u.shadows.size(), 0);
    for (const auto& subs : u.edge_shadows)
      for (int idx : subs) ++deg_possible[idx];
    for (int d : deg_possible) val_possible += f[d];
  }

  void include(std::size_t e) {
    for (int idx : u.edge_shadows[e]) {
      val_chosen += f[deg_chosen[idx] + 1] - f[deg_chosen[idx]];
      ++deg_chosen[idx];
    }
    chosen.push_back(u.edges[e]);
  }
  void undo_include(std::size_t e) {
    chosen.pop_back();
    for (int idx : u.edge_shadows[e]) {
      --deg_chosen[idx];
      val_chosen -= f[deg_chosen[idx] + 1] - f[deg_chosen[idx]];
    }
  }
  void exclude(std::size_t e) {
    for (int idx : u.edge_shadows[e]) {
      val_possible -= f[deg_possible[idx]] - f[deg_possible[idx] - 1];
      --deg_possible[idx];
    }
  }
  void undo_exclude(std::size_t e) {
    for (int idx : u.edge_shadows[e]) {
      ++deg_possible[idx];
      val_possible += f[deg_possible[idx]] - f[deg_possible[idx] - 1];
    }
  }

  void record_leaf() {
    if (val_chosen > best) {
      best = val_chosen;
      count = 1;
      witnesses.clear();
      witnesses.push_back(family_from_masks(u.n, u.k, chosen));
      return;
    }
    if (val_chosen == best) {
      ++count;
      if (static_cast<int>(witnesses.size()) < kWitnessCap) {
        Family candidate = family_from_masks(u.n, u.k, chosen);
        bool fresh = true;
        for (const Family& w : witnesses)
          if (isomorphic(candidate, w)) {
            fresh = false;
            break;
          }
        if (fresh) witnesses.push_back(std::move(candidate));
      }
    }
  }

  void run(std::size_t i) {
    ++nodes;
    if (val_possible < best) return;  // cannot even tie
    if (i == u.edges.size()) {
      record_leaf();
      return;
    }
    if (addition_keeps_nu(chosen, u.edges[i], s, u.n, u.k)) {
      include(i);
      run(i + 1);
      undo_include(i);
    }
    exclude(i);
    run(i + 1);
    undo_exclude(i);
  }
};

Count closed_value_H(const Objective& obj, int n, int k, int s) {
  switch (obj.kind) {
    case Objective::Kind::size:
      return size_A({n, k, s, 1});
    case Objective::Kind::co_norm:
      return co_norm_H_closed(n, k, s, obj.param);
    case Objective::Kind::sunflower:
      return sunflower_count_H_closed(n, k, s, obj.param);
  }
  throw std::logic_error("unreachable");
}

Count closed_value_Ak(const Objective& obj, int n, int k, int s) {
  switch (obj.kind) {
    case Objective::Kind::size:
      return size_Ak_closed(n, k, s);
    case Objective::Kind::co_norm:
      return co_norm_Ak_closed(n, k, s, obj.param);
    case Objective::Kind::sunflower:
      return sunflower_count_Ak_closed(n, k, s, obj.param);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Objective Objective::parse(std::string_view text) {
  if (text == "size") return size();
  auto parse_param = [&](std::string_view prefix) -> std::optional<int> {
    if (text.size() <= prefix.size() || text.substr(0, prefix.size()) != prefix)
      return std::nullopt;
    std::string_view num = text.substr(prefix.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || ptr != num.data() + num.size()) return std::nullopt;
    return value;
  };
  if (auto p = parse_param("co:")) {
    Objective obj = co(*p);
    obj.validate();
    return obj;
  }
  if (auto l = parse_param("sunflower:")) {
    Objective obj = sunflowers(*l);
    obj.validate();
    return obj;
  }
  throw std::invalid_argument("objective must be 'size', 'co:P' or 'sunflower:L', got '" +
                              std::string(text) + "'");
}

std::string Objective::str() const {
  switch (kind) {
    case Kind::size:
      return "size";
    case Kind::co_norm:
      return "co:" + std::to_string(param);
    case Kind::sunflower:
      return "sunflower:" + std::to_string(param);
  }
  return "?";
}

void Objective::validate() const {
  if (kind == Kind::co_norm && param < 1)
    throw std::invalid_argument("co_norm objective needs p >= 1");
  if (kind == Kind::sunflower && param < 2)
    throw std::invalid_argument("sunflower objective needs l >= 2");
}

Count Objective::eval(const Family& h) const {
  switch (kind) {
    case Kind::size:
      return Count(h.size());
    case Kind::co_norm:
      return co_norm(h, param);
    case Kind::sunflower:
      return sunflower_count(h, param);
  }
  throw std::logic_error("unreachable");
}

SearchReport exhaustive_max(int n, int k, int s, const Objective& obj) {
  obj.validate();
  if (k < 1 || k > n) throw std::invalid_argument("exhaustive_max: need 1 <= k <= n");
  if (s < 0) throw std::invalid_argument("exhaustive_max: s must be >= 0");
  Count universe = binomial(n, k);
  if (universe > Count(24))
    throw guard_error("exhaustive search requires C(n,k) <= 24, got C(" + std::to_string(n) +
                      "," + std::to_string(k) + ") = " + universe.str());
  EdgeUniverse u(n, k);
  ExhaustiveEngine engine(u, s, objective_table(obj, n - k + 1));
  engine.run(0);
  SearchReport report;
  report.optimum = report_value(obj, engine.best, k);
  report.witnesses = std::move(engine.witnesses);
  report.optimal_count = engine.count;
  report.nodes_explored = engine.nodes;
  report.method = "exhaustive";
  return report;
}

namespace {

struct HillState {
  const EdgeUniverse& u;
  const std::vector<std::uint64_t>& f;
  int s;
  std::vector<char> member;
  std::vector<std::uint64_t> masks;  // current family, unsorted
  std::vector<std::size_t> ids;      // edge index per masks entry
  std::vector<int> deg;
  std::uint64_t val = 0;

  HillState(const EdgeUniverse& universe, const std::vector<std::uint64_t>& table, int s_)
      : u(universe), f(table), s(s_) {
    member.assign(u.edges.size(), 0);
    deg.assign(u.shadows.size(), 0);
  }

  std::int64_t add_delta(std::size_t e) const {
    std::int64_t d = 0;
    for (int idx : u.edge_shadows[e])
      d += static_cast<std::int64_t>(f[deg[idx] + 1]) - static_cast<std::int64_t>(f[deg[idx]]);
    return d;
  }
  std::int64_t remove_delta(std::size_t e) const {
    std::int64_t d = 0;
    for (int idx : u.edge_shadows[e])
      d += static_cast<std::int64_t>(f[deg[idx] - 1]) - static_cast<std::int64_t>(f[deg[idx]]);
    return d;
  }
  void add(std::size_t e) {
    member[e] = 1;
    masks.push_back(u.edges[e]);
    ids.push_back(e);
    for (int idx : u.edge_shadows[e]) {
      val += f[deg[idx] + 1] - f[deg[idx]];
      ++deg[idx];
    }
  }
  void remove_at(std::size_t pos) {
    std::size_t e = ids[pos];
    member[e] = 0;
    ids[pos] = ids.back();
    ids.pop_back();
    masks[pos] = masks.back();
    masks.pop_back();
    for (int idx : u.edge_shadows[e]) {
      --deg[idx];
      val -= f[deg[idx] + 1] - f[deg[idx]];
    }
  }
  bool can_add(std::size_t e) const {
    return !member[e] && addition_keeps_nu(masks, u.edges[e], s, u.n, u.k);
  }
};

struct RestartResult {
  std::uint64_t val = 0;
  Family family;
};

RestartResult run_restart(const EdgeUniverse& u, const std::vector<std::uint64_t>& f, int s,
                          int steps, std::uint64_t restart_seed, std::uint64_t& nodes) {
  std::mt19937_64 rng(restart_seed);
  HillState st(u, f, s);
  int patience = kPatience;
  const std::size_t m = u.edges.size();
  for (int step = 0; step < steps; ++step) {
    ++nodes;
    std::uint64_t kind = rand_below(rng, 3);
    if (kind == 0) {  // add
      if (st.masks.size() == m) continue;
      std::size_t pick = m;
      for (int t = 0; t < kAddTries; ++t) {
        std::size_t e = static_cast<std::size_t>(rand_below(rng, m));
        if (st.can_add(e)) {
          pick = e;
          break;
        }
      }
      if (pick == m) continue;
      std::int64_t delta = st.add_delta(pick);
      if (delta > 0) {
        st.add(pick);
        patience = kPatience;
      } else if (delta == 0 && patience > 0) {
        st.add(pick);
        --patience;
      }
    } else if (kind == 1) {  // remove
      if (st.masks.empty()) continue;
      std::size_t pos = static_cast<std::size_t>(rand_below(rng, st.masks.size()));
      std::int64_t delta = st.remove_delta(st.ids[pos]);
      if (delta > 0) {
        st.remove_at(pos);
        patience = kPatience;
      } else if (delta == 0 && patience > 0) {
        st.remove_at(pos);
        --patience;
      }
    } else {  // swap
      if (st.masks.empty() || st.masks.size() == m) continue;
      std::size_t pos = static_cast<std::size_t>(rand_below(rng, st.masks.size()));
      std::size_t out_edge = st.ids[pos];
      std::int64_t out_delta = st.remove_delta(out_edge);
      st.remove_at(pos);
      std::size_t pick = m;
      for (int t = 0; t < kAddTries; ++t) {
        std::size_t e = static_cast<std::size_t>(rand_below(rng, m));
        if (e != out_edge && st.can_add(e)) {
          pick = e;
          break;
        }
      }
      bool applied = false;
      if (pick != m) {
        std::int64_t delta = out_delta + st.add_delta(pick);
        if (delta > 0) {
          st.add(pick);
          patience = kPatience;
          applied = true;
        } else if (delta == 0 && patience > 0) {
          st.add(pick);
          --patience;
          applied = true;
        }
      }
      if (!applied) st.add(out_edge);  // revert
    }
  }
  RestartResult out;
  out.val = st.val;
  std::vector<std::uint64_t> sorted = st.masks;
  std::sort(sorted.begin(), sorted.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return EdgeSet::from_mask(a) < EdgeSet::from_mask(b);
            });
  out.family = family_from_masks(u.n, u.k, sorted);
  return out;
}

}  // namespace

SearchReport hill_climb(int n, int k, int s, const Objective& obj, std::uint64_t seed,
                        int restarts, int steps, int threads) {
  obj.validate();
  if (k < 1 || k > n) throw std::invalid_argument("hill_climb: need 1 <= k <= n");
  if (s < 0) throw std::invalid_argument("hill_climb: s must be >= 0");
  if (restarts < 1 || steps < 1)
    throw std::invalid_argument("hill_climb: restarts and steps must be >= 1");
  threads = std::max(1, threads);

  EdgeUniverse u(n, k);
  auto table = objective_table(obj, n - k + 1);

  std::vector<std::uint64_t> vals(static_cast<std::size_t>(restarts), 0);
  std::vector<RestartResult> champions(static_cast<std::size_t>(threads));
  std::vector<char> champion_set(static_cast<std::size_t>(threads), 0);
  std::vector<std::uint64_t> node_counts(static_cast<std::size_t>(threads), 0);

  auto worker = [&](int t) {
    for (int r = t; r < restarts; r += threads) {
      RestartResult res = run_restart(u, table, s, steps,
                                      splitmix64(seed + static_cast<std::uint64_t>(r)),
                                      node_counts[static_cast<std::size_t>(t)]);
      vals[static_cast<std::size_t>(r)] = res.val;
      auto& champ = champions[static_cast<std::size_t>(t)];
      auto& set = champion_set[static_cast<std::size_t>(t)];
      if (!set || res.val > champ.val ||
          (res.val == champ.val && family_lex_less(res.family, champ.family))) {
        champ = std::move(res);
        set = 1;
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::uint64_t best = 0;
  for (std::uint64_t v : vals) best = std::max(best, v);
  std::uint64_t hits = 0;
  for (std::uint64_t v : vals)
    if (v == best) ++hits;
  const RestartResult* champion = nullptr;
  for (int t = 0; t < threads; ++t) {
    const auto& c = champions[static_cast<std::size_t>(t)];
    if (!champion_set[static_cast<std::size_t>(t)] || c.val != best) continue;
    if (!champion || family_lex_less(c.family, champion->family)) champion = &c;
  }

  SearchReport report;
  report.optimum = report_value(obj, best, k);
  if (champion) report.witnesses.push_back(champion->family);
  report.nodes_explored = 0;
  for (std::uint64_t c : node_counts) report.nodes_explored += c;
  report.method = "hill_climb";
  report.seed = seed;
  report.restarts = restarts;
  report.steps = steps;
  report.patience = kPatience;
  report.threads = threads;
  report.hits = hits;
  return report;
}

ThresholdReport threshold_scan(int k, int s, const Objective& obj, int n_from, int n_to) {
  obj.validate();
  if (n_from < k) throw std::invalid_argument("threshold_scan: need n_from >= k");
  if (n_to < n_from) throw std::invalid_argument("threshold_scan: need n_to >= n_from");
  if (s < 1) throw std::invalid_argument("threshold_scan: s must be >= 1");
  ThresholdReport report;
  report.k = k;
  report.s = s;
  report.objective = obj;
  for (int n = n_from; n <= n_to; ++n) {
    ThresholdRow row;
    row.n = n;
    row.value_H = closed_value_H(obj, n, k, s);
    row.value_Ak = closed_value_Ak(obj, n, k, s);
    row.winner = row.value_H > row.value_Ak ? 'H' : (row.value_H < row.value_Ak ? 'A' : '=');
    if (row.winner == 'H' && !report.first_H_win) report.first_H_win = n;
    report.rows.push_back(std::move(row));
  }
  if (report.first_H_win) {
    report.h_wins_through_end = true;
    for (const auto& row : report.rows)
      if (row.n >= *report.first_H_win && row.winner != 'H') report.h_wins_through_end = false;
  }
  return report;
}

namespace {

struct SequenceEnum {
  int a, b, c, n, p;
  std::uint64_t best = 0;
  std::vector<int> stack, argmax;

  void run(int pos, int prev, long long remaining, std::uint64_t sum) {
    if (pos == n) {
      if (sum > best || argmax.empty()) {
        best = sum;
        argmax = stack;
      }
      return;
    }
    int cap = std::min(prev, pos < c ? a : b);
    cap = static_cast<int>(std::min<long long>(cap, remaining));
    for (int x = cap; x >= 0; --x) {
      stack.push_back(x);
      run(pos + 1, x, remaining - x, sum + pow64(static_cast<std::uint64_t>(x),
                                                 static_cast<unsigned>(p)));
      stack.pop_back();
    }
  }
};

}  // namespace

SequenceReport verify_sequence_inequality(int a, int b, int c, int n, int p) {
  if (!(0 < b && b < a)) throw std::invalid_argument("sequence lemma: need 0 < b < a");
  if (!(0 <= c && c < n)) throw std::invalid_argument("sequence lemma: need 0 <= c < n");
  if (p < 2) throw std::invalid_argument("sequence lemma: need p >= 2");
  SequenceReport report{a, b, c, n, p, {}, true};
  long long lo = static_cast<long long>(c) * a;
  long long hi = lo + static_cast<long long>(n - c) * b;
  for (long long m = lo + 1; m < hi; ++m) {
    SequenceEnum e{a, b, c, n, p, 0, {}, {}};
    e.run(0, a, m, 0);
    SequenceCheckRow row;
    row.m = m;
    row.max_sum = e.best;
    row.bound = static_cast<std::uint64_t>(c) * pow64(static_cast<std::uint64_t>(a),
                                                      static_cast<unsigned>(p)) +
                static_cast<std::uint64_t>(m - lo) *
                    pow64(static_cast<std::uint64_t>(b), static_cast<unsigned>(p - 1));
    row.equality = row.max_sum == row.bound;
    row.argmax = std::move(e.argmax);
    if (row.max_sum > row.bound) report.all_hold = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

struct GraphBoundEngine {
  const EdgeUniverse& u;
  int s;
  std::vector<int> deg;
  std::vector<std::uint64_t> chosen;
  std::uint64_t best = 0, count = 0, nodes = 0;
  std::vector<Family> witnesses;

  void record_leaf() {
    std::uint64_t size = chosen.size();
    if (size > best) {
      best = size;
      count = 1;
      witnesses.clear();
      witnesses.push_back(family_from_masks(u.n, 2, chosen));
    } else if (size == best) {
      ++count;
      if (static_cast<int>(witnesses.size()) < kWitnessCap) {
        Family candidate = family_from_masks(u.n, 2, chosen);
        bool fresh = true;
        for (const Family& w : witnesses)
          if (isomorphic(candidate, w)) {
            fresh = false;
            break;
          }
        if (fresh) witnesses.push_back(std::move(candidate));
      }
    }
  }

  void run(std::size_t i) {
    ++nodes;
    if (chosen.size() + (u.edges.size() - i) < best) return;
    if (i == u.edges.size()) {
      record_leaf();
      return;
    }
    std::uint64_t e = u.edges[i];
    int v1 = std::countr_zero(e) + 1;
    int v2 = std::countr_zero(e & (e - 1)) + 1;
    if (deg[v1] < 2 * s && deg[v2] < 2 * s && addition_keeps_nu(chosen, e, s, u.n, 2)) {
      ++deg[v1];
      ++deg[v2];
      chosen.push_back(e);
      run(i + 1);
      chosen.pop_back();
      --deg[v1];
      --deg[v2];
    }
    run(i + 1);
  }
};

}  // namespace

GraphBoundReport verify_graph_bound(int n, int s) {
  if (s < 1) throw std::invalid_argument("graph bound: s must be >= 1");
  if (n > 8) throw guard_error("graph bound verification is exhaustive and capped at n <= 8");
  if (n < 2 * s + 1) throw guard_error("graph bound needs n >= 2s+1");
  EdgeUniverse u(n, 2);
  GraphBoundEngine engine{u, s, std::vector<int>(n + 1, 0), {}, 0, 0, 0, {}};
  engine.run(0);
  GraphBoundReport report;
  report.n = n;
  report.s = s;
  report.max_size = engine.best;
  report.bound = static_cast<std::uint64_t>(s) * (2 * s + 1);
  report.holds = report.max_size <= report.bound;
  report.attained = report.max_size == report.bound;
  report.witnesses = std::move(engine.witnesses);
  report.witness_count = engine.count;
  report.nodes_explored = engine.nodes;
  return report;
}

Family random_family_with_matching_bound(int n, int k, int s, double q, std::mt19937_64& rng) {
  if (s < 0) throw std::invalid_argument("random family: s must be >= 0");
  EdgeUniverse u(n, k);
  std::vector<EdgeSet> edges;
  for (std::uint64_t mask : u.edges)
    if (rand_unit(rng) < q) edges.push_back(EdgeSet::from_mask(mask));
  Family f = Family::make(n, k, std::move(edges));
  while (matching_number(f) > s) {
    Matching m = maximum_matching(f);
    EdgeSet victim = m[static_cast<std::size_t>(rand_below(rng, m.size()))];
    std::vector<EdgeSet> keep;
    keep.reserve(f.edges.size() - 1);
    for (EdgeSet e : f.edges)
      if (e != victim) keep.push_back(e);
    f = Family::make(n, k, std::move(keep));
  }
  return f;
}

std::vector<CorpusItem> random_corpus(std::uint64_t seed, int count) {
  std::vector<CorpusItem> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(splitmix64(seed + static_cast<std::uint64_t>(i)));
    int k = 2 + static_cast<int>(rand_below(rng, 2));
    int n_lo = k + 2;
    int n = n_lo + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(12 - n_lo + 1)));
    int s = 1 + static_cast<int>(rand_below(rng, 3));
    static constexpr double kDensities[3] = {0.1, 0.3, 0.5};
    double q = kDensities[rand_below(rng, 3)];
    out.push_back({random_family_with_matching_bound(n, k, s, q, rng), s});
  }
  return out;
}

}  // namespace sunflower
