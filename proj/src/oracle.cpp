#include "occupancy/oracle.hpp"

#include <algorithm>
#include <string>

#include "occupancy/errors.hpp"

namespace occupancy::oracle {

RestrictedGrowthString::RestrictedGrowthString(std::vector<unsigned> codes) : codes_(std::move(codes)) {
  unsigned seen = 0;
  for (unsigned c : codes_) {
    if (c > seen) throw DomainError("restricted growth string: code jumps ahead");
    if (c == seen) ++seen;
  }
}

unsigned RestrictedGrowthString::blocks() const {
  unsigned top = 0;
  for (unsigned c : codes_) top = std::max(top, c + 1);
  return top;
}

std::vector<unsigned> RestrictedGrowthString::block_sizes() const {
  std::vector<unsigned> sizes(blocks(), 0);
  for (unsigned c : codes_) ++sizes[c];
  return sizes;
}

namespace {

std::vector<unsigned> sizes_of(std::span<const unsigned> codes) {
  std::vector<unsigned> sizes;
  for (unsigned c : codes) {
    if (c >= sizes.size()) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  return sizes;
}

}  // namespace

std::map<Realization, BigCount> count_set_partitions_by_shape(unsigned n_total, unsigned max_blocks) {
  if (n_total > kMaxSetPartitionN) {
    throw OracleTooLarge("set partition oracle: N = " + std::to_string(n_total) + " exceeds " +
                         std::to_string(kMaxSetPartitionN));
  }
  if (n_total == 0 || max_blocks == 0) throw DomainError("set partition oracle: N and s must be positive");
  std::map<Realization, std::uint64_t> counts;
  for_each_rgs(n_total, max_blocks, [&](std::span<const unsigned> codes) {
    ++counts[Realization(sizes_of(codes), max_blocks)];
  });
  std::map<Realization, BigCount> out;
  for (auto& [shape, c] : counts) out.emplace(shape, BigCount{c});
  return out;
}

std::map<OrderedOccupancy, BigCount> count_functions_by_occupancy(unsigned n_total, unsigned s) {
  if (n_total == 0 || s == 0) throw DomainError("function oracle: N and s must be positive");
  std::uint64_t space = 1;
  for (unsigned i = 0; i < n_total; ++i) {
    space *= s;
    if (space > kMaxFunctionCount) {
      throw OracleTooLarge("function oracle: s^N exceeds " + std::to_string(kMaxFunctionCount));
    }
  }
  // odometer over ball -> box assignments
  std::vector<unsigned> box(n_total, 0);
  std::map<OrderedOccupancy, std::uint64_t> counts;
  while (true) {
    std::vector<unsigned> occ(s, 0);
    for (unsigned b : box) ++occ[b];
    ++counts[OrderedOccupancy(std::move(occ))];
    unsigned t = 0;
    while (t < n_total && ++box[t] == s) box[t++] = 0;
    if (t == n_total) break;
  }
  std::map<OrderedOccupancy, BigCount> out;
  for (auto& [occ, c] : counts) out.emplace(occ, BigCount{c});
  return out;
}

std::map<Realization, BigCount> count_two_level_by_shape(unsigned n_total, unsigned s, unsigned g) {
  if (n_total > kMaxTwoLevelN) {
    throw OracleTooLarge("two-level oracle: N = " + std::to_string(n_total) + " exceeds " +
                         std::to_string(kMaxTwoLevelN));
  }
  if (n_total == 0 || s == 0 || g == 0) throw DomainError("two-level oracle: N, s and g must be positive");

  // Inner fillings of a box depend only on how many balls it holds.
  std::vector<std::uint64_t> inner(n_total + 1, 0);
  for (unsigned m = 1; m <= n_total; ++m) {
    for_each_rgs(m, g, [&](std::span<const unsigned>) { ++inner[m]; });
  }

  std::map<Realization, BigCount> out;
  for_each_rgs(n_total, s, [&](std::span<const unsigned> codes) {
    const std::vector<unsigned> sizes = sizes_of(codes);
    BigCount configurations{1};
    for (unsigned size : sizes) configurations *= inner[size];
    out[Realization(sizes, s)] += configurations;
  });
  return out;
}

}  // namespace occupancy::oracle
