#include "sunflower/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace sunflower {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

Count::Count(std::uint64_t value) {
  if (value > 0) limbs_.push_back(static_cast<std::uint32_t>(value));
  if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
}

void Count::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t Count::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Count does not fit in 64 bits: " + str());
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

Count& Count::operator+=(const Count& rhs) {
  limbs_.resize(std::max(limbs_.size(), rhs.limbs_.size()), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

Count& Count::operator-=(const Count& rhs) {
  if (*this < rhs) throw std::underflow_error("Count underflow: " + str() + " - " + rhs.str());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  trim();
  return *this;
}

Count& Count::operator*=(const Count& rhs) {
  if (is_zero() || rhs.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out[i + j] + carry +
                          static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t pos = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = out[pos] + carry;
      out[pos] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++pos;
    }
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

Count& Count::operator*=(std::uint64_t rhs) { return *this *= Count(rhs); }

std::uint32_t Count::divmod_u32(std::uint32_t divisor) {
  if (divisor == 0) throw std::invalid_argument("Count division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

std::strong_ordering Count::operator<=>(const Count& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::string Count::str() const {
  if (is_zero()) return "0";
  Count tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    std::uint32_t chunk = tmp.divmod_u32(1000000000u);
    std::string part = std::to_string(chunk);
    if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
    out.insert(0, part);
  }
  return out;
}

Count Count::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  Count out;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit in Count literal");
    out *= 10u;
    out += Count(static_cast<std::uint64_t>(c - '0'));
  }
  return out;
}

}  // namespace sunflower
