#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace pseudoham {

__extension__ typedef unsigned __int128 uint128_t;

/// Non-negative exact count up to 2^128 - 1. Arithmetic throws
/// ResourceLimitError on overflow rather than wrapping.
class BigCount {
 public:
  constexpr BigCount() = default;
  constexpr BigCount(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent
  static constexpr BigCount from_raw(uint128_t v) {
    BigCount c;
    c.value_ = v;
    return c;
  }

  constexpr uint128_t raw() const { return value_; }
  bool fits_u64() const { return value_ <= UINT64_MAX; }
  std::uint64_t to_u64() const;  // throws if it does not fit

  BigCount& operator+=(const BigCount& o);
  BigCount& operator*=(const BigCount& o);
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  friend constexpr bool operator==(const BigCount&, const BigCount&) = default;
  friend constexpr std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    return a.value_ <=> b.value_;
  }

  /// Natural log; -inf for zero.
  double log() const;
  std::string to_string() const;
  static BigCount parse(const std::string& decimal);

 private:
  uint128_t value_ = 0;
};

/// n! as an exact count (n <= 34).
BigCount factorial(unsigned n);

}  // namespace pseudoham
