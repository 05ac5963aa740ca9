#include "occupancy/bigcount.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace occupancy {

BigCount::BigCount(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  v_ = static_cast<unsigned long>(v);
}

BigCount::BigCount(std::string_view decimal) {
  if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("BigCount: not a non-negative decimal integer: " + std::string(decimal));
  }
  v_.set_str(std::string(decimal), 10);
}

BigCount BigCount::pow(std::uint64_t base, unsigned exponent) {
  BigCount out;
  mpz_ui_pow_ui(out.v_.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return out;
}

BigCount BigCount::from_raw(mpz_class v) {
  if (sgn(v) < 0) throw std::domain_error("BigCount: negative value");
  BigCount out;
  out.v_ = std::move(v);
  return out;
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
  v_ += rhs.v_;
  return *this;
}

BigCount& BigCount::operator-=(const BigCount& rhs) {
  if (cmp(v_, rhs.v_) < 0) throw std::domain_error("BigCount: negative difference");
  v_ -= rhs.v_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& rhs) {
  v_ *= rhs.v_;
  return *this;
}

BigCount& BigCount::operator*=(std::uint64_t rhs) {
  v_ *= static_cast<unsigned long>(rhs);
  return *this;
}

BigCount& BigCount::operator/=(const BigCount& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigCount: division by zero");
  if (!mpz_divisible_p(v_.get_mpz_t(), rhs.v_.get_mpz_t())) {
    throw std::domain_error("BigCount: inexact division " + to_string() + " / " + rhs.to_string());
  }
  mpz_divexact(v_.get_mpz_t(), v_.get_mpz_t(), rhs.v_.get_mpz_t());
  return *this;
}

std::size_t BigCount::decimal_digits() const {
  // mpz_sizeinbase may overshoot by one for base 10
  return to_string().size();
}

double BigCount::log() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  // value = mantissa * 2^exponent with mantissa in [0.5, 1)
  const double mantissa = mpz_get_d_2exp(&exponent, v_.get_mpz_t());
  if (exponent <= 53) return std::log(v_.get_d());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

bool BigCount::fits_u64() const { return mpz_fits_ulong_p(v_.get_mpz_t()) != 0; }

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigCount: value exceeds 64 bits");
  return v_.get_ui();
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.to_string(); }

double ratio(const BigCount& num, const BigCount& den) {
  if (den.is_zero()) throw std::domain_error("ratio: zero denominator");
  mpq_class q(num.raw(), den.raw());
  q.canonicalize();
  return q.get_d();
}

}  // namespace occupancy
