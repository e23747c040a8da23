#include "pseudoham/big_count.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pseudoham/error.hpp"

namespace pseudoham {

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw ResourceLimitError("count " + to_string() + " exceeds 64 bits");
  return static_cast<std::uint64_t>(value_);
}

BigCount& BigCount::operator+=(const BigCount& o) {
  if (__builtin_add_overflow(value_, o.value_, &value_))
    throw ResourceLimitError("exact count overflowed 128 bits");
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& o) {
  if (__builtin_mul_overflow(value_, o.value_, &value_))
    throw ResourceLimitError("exact count overflowed 128 bits");
  return *this;
}

double BigCount::log() const {
  if (value_ == 0) return -std::numeric_limits<double>::infinity();
  const auto hi = static_cast<std::uint64_t>(value_ >> 64);
  const auto lo = static_cast<std::uint64_t>(value_);
  if (hi == 0) return std::log(static_cast<double>(lo));
  return std::log(static_cast<double>(hi) * 18446744073709551616.0 + static_cast<double>(lo));
}

std::string BigCount::to_string() const {
  if (value_ == 0) return "0";
  std::string out;
  uint128_t v = value_;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigCount BigCount::parse(const std::string& decimal) {
  if (decimal.empty()) throw ParseError(0, "empty integer");
  BigCount out;
  for (char ch : decimal) {
    if (ch < '0' || ch > '9') throw ParseError(0, "not a decimal integer: " + decimal);
    out *= BigCount(10);
    out += BigCount(static_cast<std::uint64_t>(ch - '0'));
  }
  return out;
}

BigCount factorial(unsigned n) {
  BigCount f(1);
  for (unsigned i = 2; i <= n; ++i) f *= BigCount(i);
  return f;
}

}  // namespace pseudoham
