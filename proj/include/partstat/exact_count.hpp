#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "partstat/error.hpp"

namespace partstat {

/// Signed arbitrary-size integer used for intermediate inclusion-exclusion sums.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-size nonnegative integer. Every count the library produces is
/// one of these; there is no fixed-width path that could wrap.
class ExactCount {
 public:
  ExactCount() = default;
  ExactCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit ExactCount(BigInt v) : value_(std::move(v)) {
    if (value_ < 0) {
      throw Error(ErrorCode::invariant, "negative count " + value_.str());
    }
  }

  const BigInt& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }
  std::string to_string() const { return value_.str(); }

  ExactCount& operator+=(const ExactCount& o) {
    value_ += o.value_;
    return *this;
  }
  friend ExactCount operator+(ExactCount a, const ExactCount& b) { return a += b; }

  friend bool operator==(const ExactCount& a, const ExactCount& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactCount& a, const ExactCount& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExactCount& c) {
    return os << c.value_;
  }

 private:
  BigInt value_{0};
};

}  // namespace partstat
