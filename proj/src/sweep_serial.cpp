#include "sweep_common.hpp"

namespace occupancy::kernel {

SweepSummary sweep_serial(Statistic statistic, unsigned n_total, unsigned s, unsigned g) {
  const PartitionWeigher weigher(statistic, n_total, s, g);
  SweepSummary acc;
  for (const auto& parts : PartitionRange(n_total, weigher.max_parts())) visit(acc, parts, weigher);
  return acc;
}

}  // namespace occupancy::kernel
