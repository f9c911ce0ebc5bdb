#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sunflower/edge_set.hpp"

namespace sunflower {

// A k-uniform set system on ground set [n]. Edges are kept lexicographically
// sorted and duplicate-free; use make() so the invariants always hold.
struct Family {
  int n = 1;
  int k = 1;
  std::vector<EdgeSet> edges;

  static Family make(int n, int k, std::vector<EdgeSet> edges);
  static Family make_labels(int n, int k, const std::vector<std::vector<int>>& edges);
  static Family empty(int n, int k);

  std::size_t size() const { return edges.size(); }
  bool contains(EdgeSet e) const;
  std::vector<std::uint64_t> masks() const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.n == b.n && a.k == b.k && a.edges == b.edges;
  }
};

// Shared text format: first significant line "n k", then one edge per line as
// k space-separated 1-based labels. Lines starting with '#' and blank lines
// are ignored; edges are canonicalized on load; duplicate edges are an error.
Family read_family(std::istream& in);
Family load_family(const std::string& path);
void write_family(std::ostream& out, const Family& f);
std::string to_text(const Family& f);

}  // namespace sunflower
