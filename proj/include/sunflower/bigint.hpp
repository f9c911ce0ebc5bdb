#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sunflower {

// Arbitrary-precision unsigned integer, little-endian base-2^32 limbs.
// Counting outputs (co_p norms, sunflower numbers, family sizes) can exceed
// a machine word even for moderate parameters, so every user-facing count
// goes through this type; codegrees themselves always fit an int.
class Count {
 public:
  Count() = default;
  Count(std::uint64_t value);  // NOLINT: implicit so Count{0}, Count{1} read naturally

  static Count from_decimal(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // throws std::overflow_error when !fits_u64()

  std::string str() const;  // decimal digits, no sign, "0" for zero

  Count& operator+=(const Count& rhs);
  Count& operator-=(const Count& rhs);  // throws std::underflow_error if rhs > *this
  Count& operator*=(const Count& rhs);
  Count& operator*=(std::uint64_t rhs);

  // In-place division by a single limb; returns the remainder.
  std::uint32_t divmod_u32(std::uint32_t divisor);

  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator-(Count a, const Count& b) { return a -= b; }
  friend Count operator*(Count a, const Count& b) { return a *= b; }
  friend Count operator*(Count a, std::uint64_t b) { return a *= b; }

  std::strong_ordering operator<=>(const Count& rhs) const;
  bool operator==(const Count& rhs) const { return limbs_ == rhs.limbs_; }

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

}  // namespace sunflower
