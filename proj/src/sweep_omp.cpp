#include <omp.h>

#include "sweep_common.hpp"

namespace occupancy::kernel {

SweepSummary sweep_parallel(Statistic statistic, unsigned n_total, unsigned s, unsigned g) {
  const PartitionWeigher weigher(statistic, n_total, s, g);
  const unsigned m = weigher.max_parts();
  // partials[a - 1] holds the partitions whose largest part is a
  std::vector<SweepSummary> partials(n_total);
  const long count = static_cast<long>(n_total);

#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const unsigned leading = static_cast<unsigned>(i + 1);
    SweepSummary& acc = partials[leading - 1];
    for (const auto& parts : PartitionRange::with_leading(n_total, m, leading)) visit(acc, parts, weigher);
  }

  SweepSummary out;
  for (auto& partial : partials) out.merge(std::move(partial));
  return out;
}

}  // namespace occupancy::kernel
