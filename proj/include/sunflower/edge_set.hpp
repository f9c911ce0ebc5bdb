#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunflower {

// A set of 1-based vertex labels packed into a 64-bit mask (label L <-> bit L-1).
// Doubles as a hyperedge and as a plain vertex set; the workbench caps ground
// sets at 64 vertices.
class EdgeSet {
 public:
  static constexpr int kMaxLabel = 64;

  constexpr EdgeSet() = default;

  static constexpr EdgeSet from_mask(std::uint64_t mask) {
    EdgeSet e;
    e.mask_ = mask;
    return e;
  }

  static EdgeSet from_labels(std::span<const int> labels) {
    EdgeSet e;
    for (int v : labels) {
      if (v < 1 || v > kMaxLabel)
        throw std::invalid_argument("vertex label out of range [1,64]: " + std::to_string(v));
      std::uint64_t bit = 1ull << (v - 1);
      if (e.mask_ & bit)
        throw std::invalid_argument("duplicate vertex " + std::to_string(v));
      e.mask_ |= bit;
    }
    return e;
  }

  static EdgeSet of(std::initializer_list<int> labels) {
    return from_labels(std::span<const int>(labels.begin(), labels.size()));
  }

  constexpr std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int label) const { return (mask_ >> (label - 1)) & 1u; }
  bool subset_of(EdgeSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(EdgeSet other) const { return (mask_ & other.mask_) != 0; }
  EdgeSet unite(EdgeSet other) const { return from_mask(mask_ | other.mask_); }
  EdgeSet intersect(EdgeSet other) const { return from_mask(mask_ & other.mask_); }
  EdgeSet minus(EdgeSet other) const { return from_mask(mask_ & ~other.mask_); }
  EdgeSet with(int label) const { return from_mask(mask_ | (1ull << (label - 1))); }
  EdgeSet without(int label) const { return from_mask(mask_ & ~(1ull << (label - 1))); }

  int min_label() const {
    if (mask_ == 0) throw std::logic_error("min_label of empty set");
    return std::countr_zero(mask_) + 1;
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr bool operator==(EdgeSet a, EdgeSet b) { return a.mask_ == b.mask_; }
  friend constexpr bool operator!=(EdgeSet a, EdgeSet b) { return a.mask_ != b.mask_; }

  // Lexicographic order on the ascending label sequences, so {1,5} < {2,3}
  // and a proper prefix sorts first.
  friend bool operator<(EdgeSet a, EdgeSet b) {
    std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    std::uint64_t above = ~((low - 1) | low);  // bits strictly above the divergence
    if (a.mask_ & low) return (b.mask_ & above) != 0;  // b ran out -> b is a prefix
    return (a.mask_ & above) == 0;
  }

 private:
  std::uint64_t mask_ = 0;
};

}  // namespace sunflower
