#include "sunflower/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sunflower/errors.hpp"

namespace sunflower {

Family Family::make(int n, int k, std::vector<EdgeSet> edges) {
  if (n < 1 || n > EdgeSet::kMaxLabel)
    throw std::invalid_argument("ground set size must be in [1,64], got " + std::to_string(n));
  if (k < 1 || k > n)
    throw std::invalid_argument("uniformity must satisfy 1 <= k <= n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
  std::uint64_t ground = (n == 64) ? ~0ull : ((1ull << n) - 1);
  for (const EdgeSet& e : edges) {
    if (e.size() != k)
      throw std::invalid_argument("edge of size " + std::to_string(e.size()) +
                                  " in a " + std::to_string(k) + "-uniform family");
    if ((e.mask() & ~ground) != 0)
      throw std::invalid_argument("edge uses a vertex outside [1," + std::to_string(n) + "]");
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    std::string labels;
    for (int v : dup->labels()) labels += std::to_string(v) + " ";
    throw std::invalid_argument("duplicate edge: " + labels);
  }
  Family f;
  f.n = n;
  f.k = k;
  f.edges = std::move(edges);
  return f;
}

Family Family::make_labels(int n, int k, const std::vector<std::vector<int>>& edges) {
  std::vector<EdgeSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) sets.push_back(EdgeSet::from_labels(e));
  return make(n, k, std::move(sets));
}

Family Family::empty(int n, int k) { return make(n, k, {}); }

bool Family::contains(EdgeSet e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<std::uint64_t> Family::masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(edges.size());
  for (EdgeSet e : edges) out.push_back(e.mask());
  return out;
}

Family read_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, k = -1;
  std::vector<EdgeSet> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ss(line);
    if (n < 0) {
      if (!(ss >> n >> k)) throw parse_error(lineno, "expected header 'n k'");
      std::string extra;
      if (ss >> extra) throw parse_error(lineno, "trailing tokens after header");
      if (n < 1 || n > EdgeSet::kMaxLabel) throw parse_error(lineno, "n out of range [1,64]");
      if (k < 1 || k > n) throw parse_error(lineno, "k out of range [1,n]");
      continue;
    }
    std::vector<int> labels;
    int v;
    while (ss >> v) labels.push_back(v);
    if (!ss.eof()) throw parse_error(lineno, "non-integer token in edge line");
    if (static_cast<int>(labels.size()) != k)
      throw parse_error(lineno, "edge has " + std::to_string(labels.size()) +
                                    " vertices, expected " + std::to_string(k));
    for (int label : labels)
      if (label < 1 || label > n)
        throw parse_error(lineno, "vertex " + std::to_string(label) + " outside [1," +
                                      std::to_string(n) + "]");
    EdgeSet e;
    try {
      e = EdgeSet::from_labels(labels);
    } catch (const std::invalid_argument& ex) {
      throw parse_error(lineno, ex.what());
    }
    edges.push_back(e);
  }
  if (n < 0) throw parse_error(lineno, "missing header 'n k'");
  try {
    return Family::make(n, k, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw parse_error(lineno, ex.what());
  }
}

Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  return read_family(in);
}

void write_family(std::ostream& out, const Family& f) {
  out << f.n << ' ' << f.k << '\n';
  for (EdgeSet e : f.edges) {
    bool first = true;
    for (int v : e.labels()) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

std::string to_text(const Family& f) {
  std::ostringstream ss;
  write_family(ss, f);
  return ss.str();
}

}  // namespace sunflower
