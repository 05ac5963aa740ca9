#include "sweep_common.hpp"

#include <algorithm>
#include <utility>

namespace occupancy::kernel {

PartitionWeigher::PartitionWeigher(Statistic statistic, unsigned n_total, unsigned s, unsigned g)
    : statistic_(statistic), n_(n_total), s_(s), spec_(g) {
  if (statistic_ == Statistic::di_degenerate) table_.emplace(n_total);
}

BigCount PartitionWeigher::weight(std::span<const unsigned> parts) const {
  switch (statistic_) {
    case Statistic::multinomial:
      return multinomial(n_, parts);
    case Statistic::di:
      return weight_di(parts);
    case Statistic::di_degenerate:
      return weight_di_degenerate(parts, spec_, *table_);
  }
  return BigCount{0};
}

BigCount PartitionWeigher::multiplicity(std::span<const unsigned> parts) const {
  if (statistic_ != Statistic::multinomial) return BigCount{1};
  BigCount arrangements = factorial(s_) / factorial(s_ - static_cast<unsigned>(parts.size()));
  BigCount symmetry{1};
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    symmetry *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return arrangements / symmetry;
}

void visit(SweepSummary& acc, std::span<const unsigned> parts, const PartitionWeigher& weigher) {
  BigCount w = weigher.weight(parts);
  acc.total += w * weigher.multiplicity(parts);
  ++acc.visited;
  if (w > acc.best) {
    acc.best = std::move(w);
    acc.argmax.assign(1, std::vector<unsigned>(parts.begin(), parts.end()));
  } else if (w == acc.best) {
    acc.argmax.emplace_back(parts.begin(), parts.end());
  }
}

void SweepSummary::merge(SweepSummary&& other) {
  total += other.total;
  visited += other.visited;
  if (other.best > best) {
    best = std::move(other.best);
    argmax = std::move(other.argmax);
  } else if (other.best == best) {
    for (auto& a : other.argmax) argmax.push_back(std::move(a));
  }
}

}  // namespace occupancy::kernel
