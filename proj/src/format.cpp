#include "occupancy/format.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>

#include "occupancy/errors.hpp"

namespace occupancy {

namespace {

std::string join(std::span<const unsigned> values, std::size_t pad_to) {
  std::ostringstream os;
  const std::size_t len = std::max(values.size(), pad_to);
  for (std::size_t i = 0; i < len; ++i) {
    if (i) os << ", ";
    os << (i < values.size() ? values[i] : 0U);
  }
  return os.str();
}

mpz_class pow10(unsigned e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

// Round num/den to the nearest integer, ties to even.
mpz_class round_half_even(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int c = cmp(mpz_class(2 * r), den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return q;
}

std::string exponent_suffix(long e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "E%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return buf;
}

// mantissa holds exactly `significant` digits
std::string scientific_from(const mpz_class& mantissa, long e) {
  const std::string digits = mantissa.get_str(10);
  std::string out(1, digits[0]);
  if (digits.size() > 1) out += "." + digits.substr(1);
  return out + exponent_suffix(e);
}

}  // namespace

std::string format_multiset(std::span<const unsigned> parts, std::size_t pad_to) {
  return "{" + join(parts, pad_to) + "}";
}

std::string format_ordered(std::span<const unsigned> slots) { return "[" + join(slots, 0) + "]"; }

std::string format_scientific(const BigCount& value, int significant) {
  if (significant < 1) throw DomainError("format_scientific: need at least one significant digit");
  if (value.is_zero()) return scientific_from(pow10(static_cast<unsigned>(significant - 1)), 0).replace(0, 1, "0");
  const auto digits = static_cast<long>(value.decimal_digits());
  long e = digits - 1;
  mpz_class mantissa;
  if (digits <= significant) {
    mantissa = value.raw() * pow10(static_cast<unsigned>(significant - digits));
  } else {
    mantissa = round_half_even(value.raw(), pow10(static_cast<unsigned>(digits - significant)));
    if (mantissa == pow10(static_cast<unsigned>(significant))) {
      mantissa /= 10;
      ++e;
    }
  }
  return scientific_from(mantissa, e);
}

std::string format_weight_short(const BigCount& value) {
  return value < BigCount{1'000'000} ? value.to_string() : format_scientific(value, 3);
}

std::string format_fixed(const BigCount& num, const BigCount& den, int decimals) {
  if (den.is_zero()) throw DomainError("format_fixed: zero denominator");
  if (decimals < 0) throw DomainError("format_fixed: negative precision");
  const mpz_class scale = pow10(static_cast<unsigned>(decimals));
  const mpz_class q = round_half_even(num.raw() * scale, den.raw());
  mpz_class whole, frac;
  mpz_tdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), q.get_mpz_t(), scale.get_mpz_t());
  std::string out = whole.get_str(10);
  if (decimals > 0) {
    std::string f = frac.get_str(10);
    out += "." + std::string(static_cast<std::size_t>(decimals) - f.size(), '0') + f;
  }
  return out;
}

std::string format_probability(const BigCount& num, const BigCount& den, int decimals) {
  if (!den.is_zero() && mpz_divisible_p(num.raw().get_mpz_t(), den.raw().get_mpz_t())) {
    return (num / den).to_string();
  }
  return format_fixed(num, den, decimals);
}

std::string format_ratio_scientific(const BigCount& num, const BigCount& den, int significant) {
  if (num.is_zero() || den.is_zero()) throw DomainError("format_ratio_scientific: needs a positive ratio");
  if (significant < 1) throw DomainError("format_ratio_scientific: need at least one significant digit");
  // 10^e <= num/den < 10^(e+1)
  long e = static_cast<long>(num.decimal_digits()) - static_cast<long>(den.decimal_digits());
  auto scaled = [&](long shift, mpz_class& n, mpz_class& d) {
    n = num.raw();
    d = den.raw();
    if (shift >= 0) n *= pow10(static_cast<unsigned>(shift));
    else d *= pow10(static_cast<unsigned>(-shift));
  };
  mpz_class n, d;
  scaled(-e, n, d);
  if (n < d) --e;
  scaled(significant - 1 - e, n, d);
  mpz_class mantissa = round_half_even(n, d);
  if (mantissa == pow10(static_cast<unsigned>(significant))) {
    mantissa /= 10;
    ++e;
  }
  return scientific_from(mantissa, e);
}

std::string format_real(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string out(buf);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

ParsedOccupancy parse_occupancy(std::string_view text) {
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return std::string_view{};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  };
  text = trim(text);
  if (text.size() < 2) throw DomainError("cannot parse occupancy '" + std::string(text) + "'");
  ParsedOccupancy out{};
  if (text.front() == '{' && text.back() == '}') {
    out.bracket = Bracket::multiset;
  } else if (text.front() == '[' && text.back() == ']') {
    out.bracket = Bracket::ordered;
  } else {
    throw DomainError("occupancy must be written {..} or [..]: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = trim(body.substr(0, comma));
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw DomainError("bad occupancy entry '" + std::string(item) + "'");
    }
    out.values.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace occupancy
