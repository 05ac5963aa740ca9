#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <span>
#include <vector>

namespace occupancy {

/// Unordered occupancy {n_i}: the nonzero occupancies sorted non-increasing.
///
/// Unfilled states are implicit; s_slots records how many states were
/// available. Two realizations are equal iff their canonical parts are equal,
/// regardless of s_slots.
class Realization {
 public:
  // Strips zeros and sorts. Throws EmptyRealization or TooManySlots.
  Realization(std::span<const unsigned> raw, unsigned s_slots);

  unsigned n_total() const { return n_total_; }
  unsigned s_slots() const { return s_slots_; }
  // k, the number of filled states.
  std::size_t filled() const { return parts_.size(); }
  std::span<const unsigned> parts() const { return parts_; }
  // Parts followed by zeros up to s_slots.
  std::vector<unsigned> padded() const;

  friend bool operator==(const Realization& a, const Realization& b) { return a.parts_ == b.parts_; }
  // Lexicographic on the canonical parts.
  friend std::weak_ordering operator<=>(const Realization& a, const Realization& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  unsigned n_total_ = 0;
  unsigned s_slots_ = 0;
  std::vector<unsigned> parts_;
};

Realization canonicalize(std::span<const unsigned> raw, unsigned s_slots);

/// Ordered occupancy [n_i]; slot order is significant.
class OrderedOccupancy {
 public:
  explicit OrderedOccupancy(std::vector<unsigned> slots);

  unsigned n_total() const { return n_total_; }
  unsigned s_slots() const { return static_cast<unsigned>(slots_.size()); }
  std::span<const unsigned> slots() const { return slots_; }

  friend bool operator==(const OrderedOccupancy&, const OrderedOccupancy&) = default;
  friend std::strong_ordering operator<=>(const OrderedOccupancy& a, const OrderedOccupancy& b) {
    return a.slots_ <=> b.slots_;
  }

 private:
  unsigned n_total_ = 0;
  std::vector<unsigned> slots_;
};

/// r_j: how many times each positive integer j occurs among the occupancies.
class RepetitivityVector {
 public:
  RepetitivityVector() = default;
  explicit RepetitivityVector(std::map<unsigned, unsigned> counts);

  const std::map<unsigned, unsigned>& counts() const { return counts_; }
  unsigned operator[](unsigned j) const;
  // sum_j r_j
  unsigned filled() const;
  // sum_j j r_j
  unsigned total() const;

  friend bool operator==(const RepetitivityVector&, const RepetitivityVector&) = default;

 private:
  std::map<unsigned, unsigned> counts_;
};

RepetitivityVector repetitivity(const Realization& r);
// Repetitivity of an arbitrary occupancy multiset; zeros are not counted.
RepetitivityVector repetitivity(std::span<const unsigned> occupancies);

/// Partitions of n into at most max_parts parts, each at most max_part, in
/// reverse-lexicographic order ({5}, {4,1}, {3,2}, ...).
///
/// The range is a cheap value and can be iterated any number of times.
/// Fixing the leading part (see with_leading) splits the space into disjoint
/// subranges for parallel sweeps.
class PartitionRange {
 public:
  PartitionRange(unsigned n_total, unsigned max_parts);
  PartitionRange(unsigned n_total, unsigned max_parts, unsigned max_part);

  // Partitions of n_total whose largest part is exactly `leading`.
  static PartitionRange with_leading(unsigned n_total, unsigned max_parts, unsigned leading);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<unsigned>;
    using difference_type = std::ptrdiff_t;
    using reference = const std::vector<unsigned>&;
    using pointer = const std::vector<unsigned>*;

    iterator() = default;
    reference operator*() const { return parts_; }
    pointer operator->() const { return &parts_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.parts_ == b.parts_);
    }

   private:
    friend class PartitionRange;
    iterator(const PartitionRange* range, bool done);

    const PartitionRange* range_ = nullptr;
    std::vector<unsigned> parts_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

  unsigned n_total() const { return n_total_; }
  unsigned max_parts() const { return max_parts_; }

 private:
  unsigned n_total_;
  unsigned max_parts_;
  unsigned max_part_;
  unsigned fixed_leading_ = 0;  // 0: not fixed
};

// Stream of canonical realizations; s is also the part-count bound.
std::vector<Realization> partitions(unsigned n_total, unsigned max_parts);

// Number of partitions of n into at most max_parts parts, saturating at UINT64_MAX.
std::uint64_t count_partitions(unsigned n_total, unsigned max_parts);

/// Weak compositions of n into exactly s ordered slots, reverse-lexicographic
/// ([n,0,...,0] first, [0,...,0,n] last).
class CompositionRange {
 public:
  CompositionRange(unsigned n_total, unsigned s_slots);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<unsigned>;
    using difference_type = std::ptrdiff_t;
    using reference = const std::vector<unsigned>&;
    using pointer = const std::vector<unsigned>*;

    iterator() = default;
    reference operator*() const { return slots_; }
    pointer operator->() const { return &slots_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.slots_ == b.slots_);
    }

   private:
    friend class CompositionRange;
    iterator(unsigned n_total, unsigned s_slots, bool done);

    std::vector<unsigned> slots_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_total_, s_slots_, false); }
  iterator end() const { return iterator(n_total_, s_slots_, true); }

 private:
  unsigned n_total_;
  unsigned s_slots_;
};

std::vector<OrderedOccupancy> compositions(unsigned n_total, unsigned s_slots);

// C(n+s-1, s-1), saturating at UINT64_MAX.
std::uint64_t count_compositions(unsigned n_total, unsigned s_slots);

}  // namespace occupancy
