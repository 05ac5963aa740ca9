#include "occupancy/maxprob.hpp"

#include <algorithm>
#include <string>

#include "occupancy/errors.hpp"
#include "occupancy/weights.hpp"
#include "sweep_common.hpp"

namespace occupancy {

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::multinomial:
      return "mult";
    case Statistic::di:
      return "di";
    case Statistic::di_degenerate:
      return "di-g";
  }
  return "?";
}

std::optional<Statistic> parse_statistic(std::string_view name) {
  if (name == "mult" || name == "multinomial") return Statistic::multinomial;
  if (name == "di") return Statistic::di;
  if (name == "di-g") return Statistic::di_degenerate;
  return std::nullopt;
}

namespace {

void require_positive(unsigned n_total, unsigned s) {
  if (n_total == 0) throw DomainError("N must be at least 1");
  if (s == 0) throw DomainError("s must be at least 1");
  check_input_size(n_total, "maxprob");
}

void check_space(std::uint64_t size, std::uint64_t cap, const char* what) {
  if (size > cap) {
    throw SearchSpaceTooLarge(std::string(what) + ": " + std::to_string(size) +
                              " realizations exceed the search cap " + std::to_string(cap));
  }
}

RealizationReport make_report(AnyRealization realization, const BigCount& weight, const BigCount& total,
                              unsigned n_total, bool is_max) {
  RealizationReport rep{std::move(realization), weight, total, ratio(weight, total),
                        entropy_from_weight(weight, n_total), is_max};
  return rep;
}

// Every distinct arrangement of the parts plus zeros over s slots, ascending.
std::vector<std::vector<unsigned>> arrangements(const std::vector<unsigned>& parts, unsigned s) {
  std::vector<unsigned> slots(parts);
  slots.resize(s, 0);
  std::sort(slots.begin(), slots.end());
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(slots);
  } while (std::next_permutation(slots.begin(), slots.end()));
  return out;
}

}  // namespace

MaxProbResult maxprob(Statistic statistic, unsigned n_total, unsigned s, unsigned g, const SearchOptions& opts) {
  require_positive(n_total, s);
  const DegenerateSpec spec(g);
  const unsigned max_parts = std::min(s, n_total);
  check_space(count_partitions(n_total, max_parts), opts.max_space, "maxprob");

  kernel::SweepSummary sweep = opts.execution == Execution::parallel
                                   ? kernel::sweep_parallel(statistic, n_total, s, spec.g())
                                   : kernel::sweep_serial(statistic, n_total, s, spec.g());
  std::sort(sweep.argmax.begin(), sweep.argmax.end());

  MaxProbResult out;
  out.statistic = statistic;
  out.n_total = n_total;
  out.s_slots = s;
  if (statistic == Statistic::di_degenerate) out.g = spec.g();
  out.max_weight = sweep.best;
  out.total_weight = sweep.total;
  out.searched = sweep.visited;

  if (statistic == Statistic::multinomial) {
    const kernel::PartitionWeigher weigher(statistic, n_total, s, spec.g());
    BigCount listed{0};
    for (const auto& parts : sweep.argmax) listed += weigher.multiplicity(parts);
    if (!listed.fits_u64() || listed.to_u64() > opts.max_space) {
      throw SearchSpaceTooLarge("maxprob: " + listed.to_string() + " tied maxima exceed the search cap");
    }
    std::vector<std::vector<unsigned>> all;
    for (const auto& parts : sweep.argmax) {
      for (auto& slots : arrangements(parts, s)) all.push_back(std::move(slots));
    }
    std::sort(all.begin(), all.end());
    for (auto& slots : all) {
      out.maxima.push_back(make_report(OrderedOccupancy(std::move(slots)), sweep.best, sweep.total, n_total, true));
    }
  } else {
    for (const auto& parts : sweep.argmax) {
      out.maxima.push_back(make_report(Realization(parts, s), sweep.best, sweep.total, n_total, true));
    }
  }
  return out;
}

MaxProbResult maxprob_multinomial(unsigned n_total, unsigned s, const SearchOptions& opts) {
  return maxprob(Statistic::multinomial, n_total, s, 1, opts);
}

MaxProbResult maxprob_di(unsigned n_total, unsigned s, const SearchOptions& opts) {
  return maxprob(Statistic::di, n_total, s, 1, opts);
}

MaxProbResult maxprob_di_degenerate(unsigned n_total, unsigned s, unsigned g, const SearchOptions& opts) {
  return maxprob(Statistic::di_degenerate, n_total, s, g, opts);
}

std::vector<RealizationReport> distribution_table(Statistic statistic, unsigned n_total, unsigned s, unsigned g,
                                                  const SearchOptions& opts) {
  require_positive(n_total, s);
  const DegenerateSpec spec(g);

  struct Row {
    AnyRealization realization;
    std::vector<unsigned> key;
    BigCount weight;
  };
  std::vector<Row> rows;
  BigCount total{0};

  if (statistic == Statistic::multinomial) {
    check_space(count_compositions(n_total, s), opts.max_space, "distribution_table");
    for (const auto& slots : CompositionRange(n_total, s)) {
      OrderedOccupancy occ(slots);
      BigCount w = weight_multinomial(occ);
      total += w;
      rows.push_back({std::move(occ), slots, std::move(w)});
    }
  } else {
    check_space(count_partitions(n_total, std::min(s, n_total)), opts.max_space, "distribution_table");
    const kernel::PartitionWeigher weigher(statistic, n_total, s, spec.g());
    for (const auto& parts : PartitionRange(n_total, weigher.max_parts())) {
      BigCount w = weigher.weight(parts);
      total += w;
      rows.push_back({Realization(parts, s), parts, std::move(w)});
    }
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.key < b.key;
  });

  std::vector<RealizationReport> out;
  out.reserve(rows.size());
  const BigCount best = rows.empty() ? BigCount{0} : rows.front().weight;
  for (auto& row : rows) {
    const bool is_max = row.weight == best;
    out.push_back(make_report(std::move(row.realization), row.weight, total, n_total, is_max));
  }
  return out;
}

}  // namespace occupancy
