#pragma once

#include <span>
#include <vector>

#include "occupancy/bigcount.hpp"

namespace occupancy {

inline constexpr unsigned kDefaultInputLimit = 5000;

// Largest N accepted by the table-building primitives. Process-wide.
unsigned input_limit();
void set_input_limit(unsigned max_n);
// Throws InputTooLarge when n exceeds input_limit().
void check_input_size(unsigned n, const char* what);

BigCount factorial(unsigned n);

// C(n, k); zero when k > n.
BigCount binomial(unsigned n, unsigned k);

// n_total! / prod(parts_i!). Throws SumMismatch when the parts do not sum to n_total.
BigCount multinomial(unsigned n_total, std::span<const unsigned> parts);

/// Triangle of Stirling numbers of the second kind, {n k} for 0 <= k <= n <= max_n.
///
/// Built row by row from {n k} = {n-1 k-1} + k {n-1 k} with {0 0} = 1 and is
/// immutable afterwards, so one instance can be shared by concurrent readers.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_n);

  unsigned max_n() const { return max_n_; }

  // {n k}; zero for k > n. Requires n <= max_n().
  const BigCount& operator()(unsigned n, unsigned k) const;

  // B(n, s) = sum_{k=1..min(s,n)} {n k}, with B(0, s) = 1.
  BigCount bell(unsigned n, unsigned s) const;

  std::span<const BigCount> row(unsigned n) const;

 private:
  unsigned max_n_;
  std::vector<std::vector<BigCount>> rows_;
};

BigCount stirling2(unsigned n, unsigned k);

// Incomplete Bell number B(n, s): set partitions of n items into at most s blocks.
BigCount bell_incomplete(unsigned n, unsigned s);

}  // namespace occupancy
