#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <type_traits>

#include "ivmc/error.hpp"

namespace ivmc {

/// Signed 128-bit integer with overflow-checked arithmetic.
///
/// Edge and cut counts of generated instances exceed 64 bits well before
/// n = 100 (the per-gadget term n*q^2 alone is ~1.6e19 at n = 100), so all
/// counting in the library goes through this type. Any overflow throws
/// instead of wrapping.
class Big {
 public:
  constexpr Big() = default;
  template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
  constexpr Big(T v) : v_(v) {}  // NOLINT: implicit conversion from any integer

  static Big product(long long a, long long b) { return Big(a) * Big(b); }

  Big operator+(Big o) const {
    Big r;
    if (__builtin_add_overflow(v_, o.v_, &r.v_)) throw Error("Big: addition overflow");
    return r;
  }
  Big operator-(Big o) const {
    Big r;
    if (__builtin_sub_overflow(v_, o.v_, &r.v_)) throw Error("Big: subtraction overflow");
    return r;
  }
  Big operator*(Big o) const {
    Big r;
    if (__builtin_mul_overflow(v_, o.v_, &r.v_)) throw Error("Big: multiplication overflow");
    return r;
  }
  Big operator-() const { return Big(0) - *this; }
  Big& operator+=(Big o) { return *this = *this + o; }
  Big& operator-=(Big o) { return *this = *this - o; }
  Big& operator*=(Big o) { return *this = *this * o; }

  friend auto operator<=>(const Big&, const Big&) = default;

  /// Decimal representation (no grouping, leading '-' if negative).
  std::string str() const;

  /// Parses a decimal string with optional leading '-'. Throws on garbage
  /// or overflow.
  static Big parse(const std::string& text);

  /// Narrows to int64, throwing if the value does not fit.
  std::int64_t as_i64() const;

  bool fits_i64() const;
  bool is_zero() const { return v_ == 0; }

 private:
  __int128 v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Big& b);

}  // namespace ivmc
