#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace crossint {

/// Arbitrary-precision unsigned integer, base 2^32 limbs.
///
/// Covers exactly what exact bound evaluation needs: addition, checked
/// subtraction, multiplication, small division, comparison, and exact
/// decimal formatting. Values are always non-negative.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v);  // NOLINT: implicit by design

  bool is_zero() const { return d_.empty(); }
  bool fits_u64() const { return d_.size() <= 2; }
  std::uint64_t as_u64() const;  // throws std::overflow_error when too large

  BigNat& operator+=(const BigNat& o);
  BigNat& operator-=(const BigNat& o);  // throws std::underflow_error if o > *this
  BigNat operator*(const BigNat& o) const;

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  BigNat& operator*=(const BigNat& o) { return *this = *this * o; }

  BigNat& mul_u64(std::uint64_t m);
  // In-place division by a 64-bit divisor; returns the remainder.
  std::uint64_t divmod_u64(std::uint64_t divisor);

  friend bool operator==(const BigNat&, const BigNat&) = default;
  friend bool operator<(const BigNat& a, const BigNat& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigNat& a, const BigNat& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigNat& a, const BigNat& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigNat& a, const BigNat& b) { return cmp(a, b) >= 0; }

  /// Exact decimal representation, no separators, no exponent.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const BigNat& v);

 private:
  static int cmp(const BigNat& a, const BigNat& b);
  void trim();
  std::vector<std::uint32_t> d_;  // little-endian, no trailing zero limb
};

}  // namespace crossint
