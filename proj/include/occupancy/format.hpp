#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "occupancy/bigcount.hpp"
#include "occupancy/realization.hpp"

namespace occupancy {

// "{5, 3, 2}" / "[10, 10, 10]". pad_to appends zeros up to that many entries.
std::string format_multiset(std::span<const unsigned> parts, std::size_t pad_to = 0);
std::string format_ordered(std::span<const unsigned> slots);

// Mantissa/exponent form with `significant` digits, rounded half-even from
// the exact value: 5550996791340 -> "5.55E+12".
std::string format_scientific(const BigCount& value, int significant = 3);

// Exact integer below 10^6, scientific with 3 digits from there on.
std::string format_weight_short(const BigCount& value);

// num/den rounded half-even to `decimals` places; "0.256046".
std::string format_fixed(const BigCount& num, const BigCount& den, int decimals);
// Probability column: fixed decimals, except exact integers (0 or 1) print bare.
std::string format_probability(const BigCount& num, const BigCount& den, int decimals);
// num/den in scientific notation: "3.629E-04". Requires num > 0.
std::string format_ratio_scientific(const BigCount& num, const BigCount& den, int significant);

// Round a real to `decimals` places, fixed notation.
std::string format_real(double value, int decimals);

enum class Bracket { multiset, ordered };

struct ParsedOccupancy {
  Bracket bracket;
  std::vector<unsigned> values;
};

// Accepts "{2,2,1}", "{2, 1, 0}", "[3, 3, 4]". Throws DomainError on bad syntax.
ParsedOccupancy parse_occupancy(std::string_view text);

}  // namespace occupancy
