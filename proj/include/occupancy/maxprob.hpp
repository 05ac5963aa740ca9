#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "occupancy/bigcount.hpp"
#include "occupancy/entropy.hpp"
#include "occupancy/realization.hpp"

namespace occupancy {

enum class Statistic { multinomial, di, di_degenerate };

std::string_view to_string(Statistic s);
std::optional<Statistic> parse_statistic(std::string_view name);

enum class Execution { serial, parallel };

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

struct SearchOptions {
  std::uint64_t max_space = kDefaultSearchCap;
  Execution execution = Execution::parallel;
};

using AnyRealization = std::variant<Realization, OrderedOccupancy>;

struct RealizationReport {
  AnyRealization realization;
  BigCount weight;
  BigCount total_weight;
  double probability = 0.0;
  EntropyValue entropy_exact;
  bool is_max = false;
};

struct MaxProbResult {
  Statistic statistic = Statistic::di;
  unsigned n_total = 0;
  unsigned s_slots = 0;
  std::optional<unsigned> g;
  // Every argmax realization, sorted lexicographically ascending.
  std::vector<RealizationReport> maxima;
  BigCount max_weight;
  BigCount total_weight;
  // Number of realizations examined (canonical partitions for every statistic).
  std::uint64_t searched = 0;
};

// Argmax over all ordered occupancies. Ordered occupancies that are
// permutations of one another share a weight, so the sweep runs over
// canonical partitions and expands the winners into their permutations.
MaxProbResult maxprob_multinomial(unsigned n_total, unsigned s, const SearchOptions& opts = {});

MaxProbResult maxprob_di(unsigned n_total, unsigned s, const SearchOptions& opts = {});

MaxProbResult maxprob_di_degenerate(unsigned n_total, unsigned s, unsigned g,
                                    const SearchOptions& opts = {});

MaxProbResult maxprob(Statistic statistic, unsigned n_total, unsigned s, unsigned g = 1,
                      const SearchOptions& opts = {});

// Every realization with its weight and probability, sorted by descending
// weight then ascending lexicographic order. The multinomial table lists
// ordered occupancies, so its size is C(N+s-1, s-1).
std::vector<RealizationReport> distribution_table(Statistic statistic, unsigned n_total, unsigned s,
                                                  unsigned g = 1, const SearchOptions& opts = {});

namespace kernel {

/// Reduction state of a sweep over partitions of N into at most s parts.
/// Each partition contributes weight * multiplicity to the total.
struct SweepSummary {
  BigCount total;
  BigCount best;
  std::vector<std::vector<unsigned>> argmax;
  std::uint64_t visited = 0;

  // Associative and, after sorting argmax, order-independent.
  void merge(SweepSummary&& other);
};

// Reference implementation: one pass over the whole partition space.
SweepSummary sweep_serial(Statistic statistic, unsigned n_total, unsigned s, unsigned g);

// OpenMP: disjoint subranges keyed by the leading part, reduced in order.
SweepSummary sweep_parallel(Statistic statistic, unsigned n_total, unsigned s, unsigned g);

}  // namespace kernel

}  // namespace occupancy
