#pragma once

// Test-only reference computations. None of these call into the library's
// counting code; they enumerate or multiply things out directly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "occupancy/bigcount.hpp"

namespace brute {

inline occupancy::BigCount factorial(unsigned n) {
  occupancy::BigCount out{1};
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

// Every non-increasing sequence of positive integers summing to n with at
// most max_parts entries, by plain recursion.
inline std::set<std::vector<unsigned>> partitions(unsigned n, unsigned max_parts) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned cap) {
    if (rest == 0) {
      out.insert(cur);
      return;
    }
    if (cur.size() == max_parts) return;
    for (unsigned v = std::min(rest, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(rest - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Weak compositions by scanning every vector in [0, n]^s.
inline std::set<std::vector<unsigned>> compositions(unsigned n, unsigned s) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> v(s, 0);
  while (true) {
    unsigned sum = 0;
    for (unsigned x : v) sum += x;
    if (sum == n) out.insert(v);
    unsigned t = 0;
    while (t < s && ++v[t] > n) v[t++] = 0;
    if (t == s) break;
  }
  return out;
}

// Labelled balls into unlabelled boxes: assign each ball to an existing box or
// a new one, and tally the resulting box sizes (sorted non-increasing).
inline std::map<std::vector<unsigned>, std::uint64_t> set_partition_shapes(unsigned n, unsigned max_blocks) {
  std::map<std::vector<unsigned>, std::uint64_t> out;
  std::vector<unsigned> boxes;
  std::function<void(unsigned)> rec = [&](unsigned ball) {
    if (ball == n) {
      std::vector<unsigned> shape = boxes;
      std::sort(shape.rbegin(), shape.rend());
      ++out[shape];
      return;
    }
    // index loop: the recursion below grows `boxes`
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      ++boxes[i];
      rec(ball + 1);
      --boxes[i];
    }
    if (boxes.size() < max_blocks) {
      boxes.push_back(1);
      rec(ball + 1);
      boxes.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::uint64_t set_partitions_exact_blocks(unsigned n, unsigned k) {
  std::uint64_t total = 0;
  for (const auto& [shape, c] : set_partition_shapes(n, k)) {
    if (shape.size() == k) total += c;
  }
  return total;
}

inline double shannon(const std::vector<double>& p) {
  long double h = 0;
  for (double x : p) {
    if (x > 0) h -= static_cast<long double>(x) * std::log(static_cast<long double>(x));
  }
  return static_cast<double>(h);
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20260101u);
  return gen;
}

}  // namespace brute
