#pragma once

#include <optional>
#include <span>

#include "occupancy/exactmath.hpp"
#include "occupancy/maxprob.hpp"
#include "occupancy/weights.hpp"

namespace occupancy::kernel {

// Weight of one canonical partition under a statistic, and how many
// realizations of that statistic it stands for.
class PartitionWeigher {
 public:
  PartitionWeigher(Statistic statistic, unsigned n_total, unsigned s, unsigned g);

  BigCount weight(std::span<const unsigned> parts) const;
  // 1 for the unordered statistics; the number of distinct slot
  // arrangements s! / ((s-k)! prod r_j!) for the multinomial one.
  BigCount multiplicity(std::span<const unsigned> parts) const;

  unsigned max_parts() const { return std::min(s_, n_); }

 private:
  Statistic statistic_;
  unsigned n_;
  unsigned s_;
  DegenerateSpec spec_;
  std::optional<StirlingTable> table_;
};

void visit(SweepSummary& acc, std::span<const unsigned> parts, const PartitionWeigher& weigher);

}  // namespace occupancy::kernel
