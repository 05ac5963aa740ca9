#include "occupancy/realization.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "occupancy/errors.hpp"
#include "occupancy/exactmath.hpp"

namespace occupancy {

Realization::Realization(std::span<const unsigned> raw, unsigned s_slots) : s_slots_(s_slots) {
  if (s_slots == 0) throw DomainError("realization: s must be positive");
  for (unsigned v : raw) {
    if (v > 0) parts_.push_back(v);
    n_total_ += v;
  }
  if (parts_.empty()) throw EmptyRealization("realization: all occupancies are zero");
  if (parts_.size() > s_slots) {
    throw TooManySlots("realization: " + std::to_string(parts_.size()) + " filled states exceed s = " +
                       std::to_string(s_slots));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::vector<unsigned> Realization::padded() const {
  std::vector<unsigned> out(parts_.begin(), parts_.end());
  out.resize(std::max<std::size_t>(s_slots_, parts_.size()), 0);
  return out;
}

Realization canonicalize(std::span<const unsigned> raw, unsigned s_slots) { return Realization(raw, s_slots); }

OrderedOccupancy::OrderedOccupancy(std::vector<unsigned> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw DomainError("ordered occupancy: needs at least one slot");
  n_total_ = std::accumulate(slots_.begin(), slots_.end(), 0U);
}

RepetitivityVector::RepetitivityVector(std::map<unsigned, unsigned> counts) {
  for (auto [j, r] : counts) {
    if (j == 0) throw DomainError("repetitivity: occupancy 0 is not counted");
    if (r > 0) counts_.emplace(j, r);
  }
}

unsigned RepetitivityVector::operator[](unsigned j) const {
  auto it = counts_.find(j);
  return it == counts_.end() ? 0 : it->second;
}

unsigned RepetitivityVector::filled() const {
  unsigned k = 0;
  for (auto [j, r] : counts_) k += r;
  return k;
}

unsigned RepetitivityVector::total() const {
  unsigned n = 0;
  for (auto [j, r] : counts_) n += j * r;
  return n;
}

RepetitivityVector repetitivity(std::span<const unsigned> occupancies) {
  std::map<unsigned, unsigned> counts;
  for (unsigned v : occupancies) {
    if (v > 0) ++counts[v];
  }
  return RepetitivityVector(std::move(counts));
}

RepetitivityVector repetitivity(const Realization& r) { return repetitivity(r.parts()); }

// --- partitions -------------------------------------------------------------

PartitionRange::PartitionRange(unsigned n_total, unsigned max_parts)
    : PartitionRange(n_total, max_parts, n_total) {}

PartitionRange::PartitionRange(unsigned n_total, unsigned max_parts, unsigned max_part)
    : n_total_(n_total), max_parts_(max_parts), max_part_(std::min(max_part, n_total)) {}

PartitionRange PartitionRange::with_leading(unsigned n_total, unsigned max_parts, unsigned leading) {
  PartitionRange r(n_total, max_parts, leading);
  r.fixed_leading_ = leading;
  return r;
}

namespace {

// Appends the lexicographically largest partition of `rest` into parts <= cap.
void fill_greedy(std::vector<unsigned>& parts, unsigned rest, unsigned cap) {
  while (rest > 0) {
    const unsigned v = std::min(rest, cap);
    parts.push_back(v);
    rest -= v;
  }
}

bool fits(unsigned long long rest, unsigned cap, unsigned slots) {
  return rest <= static_cast<unsigned long long>(cap) * slots;
}

}  // namespace

PartitionRange::iterator::iterator(const PartitionRange* range, bool done) : range_(range), done_(done) {
  if (done_) return;
  const unsigned n = range->n_total_;
  const unsigned m = range->max_parts_;
  if (range->fixed_leading_ != 0) {
    const unsigned lead = range->fixed_leading_;
    if (lead > n || m == 0 || !fits(n - lead, lead, m - 1)) {
      done_ = true;
      return;
    }
    parts_.push_back(lead);
    fill_greedy(parts_, n - lead, lead);
    return;
  }
  if (n == 0) return;  // the empty partition, once
  if (m == 0 || range->max_part_ == 0 || !fits(n, range->max_part_, m)) {
    done_ = true;
    return;
  }
  fill_greedy(parts_, n, range->max_part_);
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  const unsigned n = range_->n_total_;
  const unsigned m = range_->max_parts_;
  const std::size_t lo = range_->fixed_leading_ != 0 ? 1 : 0;
  unsigned long long prefix = std::accumulate(parts_.begin(), parts_.end(), 0ULL);
  for (std::size_t i = parts_.size(); i-- > lo;) {
    prefix -= parts_[i];
    const unsigned v = parts_[i] - 1;
    if (v == 0) continue;
    const unsigned long long rest = n - prefix - v;
    if (!fits(rest, v, m - static_cast<unsigned>(i) - 1)) continue;
    parts_[i] = v;
    parts_.resize(i + 1);
    fill_greedy(parts_, static_cast<unsigned>(rest), v);
    return *this;
  }
  done_ = true;
  parts_.clear();
  return *this;
}

std::vector<Realization> partitions(unsigned n_total, unsigned max_parts) {
  std::vector<Realization> out;
  if (n_total == 0) return out;
  for (const auto& p : PartitionRange(n_total, max_parts)) out.emplace_back(p, std::max(max_parts, 1U));
  return out;
}

std::uint64_t count_partitions(unsigned n_total, unsigned max_parts) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // partitions into at most m parts == partitions into parts of size at most m
  std::vector<std::uint64_t> ways(n_total + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= std::min(max_parts, n_total); ++part) {
    for (unsigned j = part; j <= n_total; ++j) {
      ways[j] = ways[j] > kMax - ways[j - part] ? kMax : ways[j] + ways[j - part];
    }
  }
  return ways[n_total];
}

// --- compositions -----------------------------------------------------------

CompositionRange::CompositionRange(unsigned n_total, unsigned s_slots) : n_total_(n_total), s_slots_(s_slots) {}

CompositionRange::iterator::iterator(unsigned n_total, unsigned s_slots, bool done) : done_(done) {
  if (done_) return;
  if (s_slots == 0) {
    done_ = true;
    return;
  }
  slots_.assign(s_slots, 0);
  slots_[0] = n_total;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  const std::size_t s = slots_.size();
  const unsigned tail = slots_[s - 1];
  slots_[s - 1] = 0;
  std::size_t i = s - 1;
  while (i-- > 0) {
    if (slots_[i] > 0) {
      --slots_[i];
      slots_[i + 1] = tail + 1;
      return *this;
    }
  }
  done_ = true;
  slots_.clear();
  return *this;
}

std::vector<OrderedOccupancy> compositions(unsigned n_total, unsigned s_slots) {
  std::vector<OrderedOccupancy> out;
  for (const auto& c : CompositionRange(n_total, s_slots)) out.emplace_back(c);
  return out;
}

std::uint64_t count_compositions(unsigned n_total, unsigned s_slots) {
  if (s_slots == 0) return 0;
  const BigCount c = binomial(n_total + s_slots - 1, s_slots - 1);
  return c.fits_u64() ? c.to_u64() : std::numeric_limits<std::uint64_t>::max();
}

}  // namespace occupancy
