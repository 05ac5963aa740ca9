#include "occupancy/exactmath.hpp"

#include <atomic>
#include <numeric>
#include <string>

#include "occupancy/errors.hpp"

namespace occupancy {

namespace {
std::atomic<unsigned> g_input_limit{kDefaultInputLimit};
}  // namespace

unsigned input_limit() { return g_input_limit.load(std::memory_order_relaxed); }

void set_input_limit(unsigned max_n) { g_input_limit.store(max_n, std::memory_order_relaxed); }

void check_input_size(unsigned n, const char* what) {
  const unsigned limit = input_limit();
  if (n > limit) {
    throw InputTooLarge(std::string(what) + ": N = " + std::to_string(n) + " exceeds the input limit " +
                        std::to_string(limit));
  }
}

BigCount factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return BigCount::from_raw(std::move(out));
}

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return BigCount{0};
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return BigCount::from_raw(std::move(out));
}

BigCount multinomial(unsigned n_total, std::span<const unsigned> parts) {
  const unsigned long long sum = std::accumulate(parts.begin(), parts.end(), 0ULL);
  if (sum != n_total) {
    throw SumMismatch("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                      std::to_string(n_total));
  }
  // product of binomials along the filling chain
  BigCount out{1};
  unsigned remaining = n_total;
  for (unsigned p : parts) {
    out *= binomial(remaining, p);
    remaining -= p;
  }
  return out;
}

StirlingTable::StirlingTable(unsigned max_n) : max_n_(max_n) {
  check_input_size(max_n, "StirlingTable");
  rows_.reserve(max_n + 1);
  rows_.push_back({BigCount{1}});
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigCount> row(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
      BigCount v = prev[k - 1];
      if (k < n) v += prev[k] * BigCount{k};
      row[k] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

const BigCount& StirlingTable::operator()(unsigned n, unsigned k) const {
  static const BigCount zero{0};
  if (n > max_n_) throw std::out_of_range("StirlingTable: n beyond table");
  if (k > n) return zero;
  return rows_[n][k];
}

BigCount StirlingTable::bell(unsigned n, unsigned s) const {
  if (n == 0) return BigCount{1};
  BigCount sum{0};
  for (unsigned k = 1; k <= std::min(s, n); ++k) sum += (*this)(n, k);
  return sum;
}

std::span<const BigCount> StirlingTable::row(unsigned n) const {
  if (n > max_n_) throw std::out_of_range("StirlingTable: n beyond table");
  return rows_[n];
}

BigCount stirling2(unsigned n, unsigned k) {
  if (k > n) return BigCount{0};
  return StirlingTable(n)(n, k);
}

BigCount bell_incomplete(unsigned n, unsigned s) { return StirlingTable(n).bell(n, s); }

}  // namespace occupancy
