#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyomino {

/// Exact non-negative integer used for every reported count.
///
/// Backed by an arbitrary-precision integer; operations that would produce
/// a negative value or divide inexactly throw instead of wrapping.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static BigCount parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty count literal");
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("malformed count literal: " + std::string(text));
      }
    }
    BigCount out;
    out.value_ = Storage(std::string(text));
    return out;
  }

  BigCount& operator+=(const BigCount& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  BigCount& operator-=(const BigCount& rhs) {
    if (rhs.value_ > value_) throw std::range_error("BigCount subtraction underflow");
    value_ -= rhs.value_;
    return *this;
  }

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }

  /// Remainder of division by a small positive divisor.
  [[nodiscard]] std::uint64_t mod(std::uint64_t divisor) const {
    if (divisor == 0) throw std::domain_error("modulo by zero");
    return static_cast<std::uint64_t>(value_ % divisor);
  }

  /// Quotient of an exact division; throws when `divisor` does not divide.
  [[nodiscard]] BigCount divide_exact(std::uint64_t divisor) const {
    if (mod(divisor) != 0) {
      throw std::domain_error(str() + " is not divisible by " + std::to_string(divisor));
    }
    BigCount out;
    out.value_ = value_ / divisor;
    return out;
  }

  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
  [[nodiscard]] std::string str() const { return value_.str(); }

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigCount& v) { return os << v.str(); }

 private:
  using Storage = boost::multiprecision::checked_cpp_int;
  Storage value_{0};
};

}  // namespace polyomino
