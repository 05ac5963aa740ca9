#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace occupancy {

/// Exact non-negative integer count of configurations.
///
/// Thin value wrapper over a GMP integer. Only the operations that keep the
/// value non-negative are exposed; division is exact division and throws if
/// the divisor does not divide the value.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigCount(std::string_view decimal);

  static BigCount pow(std::uint64_t base, unsigned exponent);

  BigCount& operator+=(const BigCount& rhs);
  // Counts never go negative: throws std::domain_error if rhs > *this.
  BigCount& operator-=(const BigCount& rhs);
  BigCount& operator*=(const BigCount& rhs);
  BigCount& operator*=(std::uint64_t rhs);
  // Exact division. Throws std::domain_error on a non-zero remainder.
  BigCount& operator/=(const BigCount& rhs);

  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator-(BigCount lhs, const BigCount& rhs) { return lhs -= rhs; }
  friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }
  friend BigCount operator/(BigCount lhs, const BigCount& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  std::string to_string() const { return v_.get_str(10); }
  // Number of decimal digits (exact; 1 for zero).
  std::size_t decimal_digits() const;
  // Natural logarithm, accurate to double precision for any magnitude.
  double log() const;
  // Nearest double; may overflow to infinity for very large values.
  double to_double() const { return v_.get_d(); }
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  const mpz_class& raw() const { return v_; }
  static BigCount from_raw(mpz_class v);

 private:
  mpz_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

// num / den as the nearest double, computed from the exact rational.
double ratio(const BigCount& num, const BigCount& den);

}  // namespace occupancy
