#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "occupancy/bigcount.hpp"
#include "occupancy/realization.hpp"

// Brute-force enumeration counters used to validate the closed-form weights.
// Nothing in the library proper depends on this header.
namespace occupancy::oracle {

inline constexpr unsigned kMaxSetPartitionN = 14;
inline constexpr unsigned kMaxTwoLevelN = 10;
inline constexpr std::uint64_t kMaxFunctionCount = 10'000'000;

/// Restricted growth string: codes[0] = 0, codes[t] <= 1 + max(codes[0..t)).
class RestrictedGrowthString {
 public:
  explicit RestrictedGrowthString(std::vector<unsigned> codes);
  std::span<const unsigned> codes() const { return codes_; }
  unsigned blocks() const;
  // Block sizes, one per block label.
  std::vector<unsigned> block_sizes() const;

 private:
  std::vector<unsigned> codes_;
};

// Calls visit(codes) for every restricted growth string of length n with at
// most max_blocks distinct codes. n = 0 visits the empty string once.
template <class Visit>
void for_each_rgs(unsigned n, unsigned max_blocks, Visit&& visit);

// Set partitions of n labelled balls into <= max_blocks unlabelled boxes,
// counted by block-size multiset. Throws OracleTooLarge for n > 14.
std::map<Realization, BigCount> count_set_partitions_by_shape(unsigned n_total, unsigned max_blocks);

// All s^N assignments of labelled balls to labelled boxes, counted by
// occupancy vector. Throws OracleTooLarge when s^N > 10^7.
std::map<OrderedOccupancy, BigCount> count_functions_by_occupancy(unsigned n_total, unsigned s);

// Set partitions into <= s boxes, each box further split into <= g unlabelled
// sub-boxes, counted by box-size multiset. Throws OracleTooLarge for n > 10.
std::map<Realization, BigCount> count_two_level_by_shape(unsigned n_total, unsigned s, unsigned g);

template <class Visit>
void for_each_rgs(unsigned n, unsigned max_blocks, Visit&& visit) {
  std::vector<unsigned> codes(n, 0);
  if (n == 0) {
    visit(std::span<const unsigned>(codes));
    return;
  }
  if (max_blocks == 0) return;
  // used[t]: number of distinct codes among codes[0..t)
  std::vector<unsigned> used(n + 1, 1);
  used[0] = 0;
  while (true) {
    visit(std::span<const unsigned>(codes));
    unsigned t = n - 1;
    while (t >= 1 && codes[t] >= std::min(used[t], max_blocks - 1)) --t;
    if (t == 0) return;
    ++codes[t];
    used[t + 1] = std::max(used[t], codes[t] + 1);
    for (unsigned u = t + 1; u < n; ++u) {
      codes[u] = 0;
      used[u + 1] = used[u];
    }
  }
}

}  // namespace occupancy::oracle
