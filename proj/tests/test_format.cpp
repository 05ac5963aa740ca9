#include <doctest.h>

#include "occupancy/errors.hpp"
#include "occupancy/exactmath.hpp"
#include "occupancy/format.hpp"

using occupancy::BigCount;
using V = std::vector<unsigned>;

TEST_CASE("realization text") {
  CHECK(occupancy::format_multiset(V{5, 3, 2}) == "{5, 3, 2}");
  CHECK(occupancy::format_multiset(V{2, 1}, 3) == "{2, 1, 0}");
  CHECK(occupancy::format_ordered(V{10, 10, 10}) == "[10, 10, 10]");
}

TEST_CASE("scientific weights") {
  CHECK(occupancy::format_scientific(BigCount{5550996791340ULL}) == "5.55E+12");
  CHECK(occupancy::format_scientific(occupancy::factorial(10)) == "3.63E+06");
  CHECK(occupancy::format_scientific(BigCount{"740265397528575488041092575580670044000000000"}) == "7.40E+44");
  CHECK(occupancy::format_scientific(BigCount{999500}) == "1.00E+06");  // carry
  CHECK(occupancy::format_scientific(BigCount{12250}) == "1.22E+04");   // tie to even
  CHECK(occupancy::format_scientific(BigCount{12350}) == "1.24E+04");
  CHECK(occupancy::format_scientific(BigCount{7}) == "7.00E+00");
  CHECK(occupancy::format_scientific(BigCount{0}) == "0.00E+00");
  CHECK(occupancy::format_scientific(BigCount{123456}, 1) == "1E+05");

  CHECK(occupancy::format_weight_short(BigCount{12600}) == "12600");
  CHECK(occupancy::format_weight_short(BigCount{999999}) == "999999");
  CHECK(occupancy::format_weight_short(BigCount{1000000}) == "1.00E+06");
}

TEST_CASE("fixed probabilities, half-even") {
  CHECK(occupancy::format_fixed(BigCount{2520}, BigCount{9842}, 6) == "0.256046");
  CHECK(occupancy::format_fixed(BigCount{15}, BigCount{41}, 6) == "0.365854");
  CHECK(occupancy::format_fixed(BigCount{1}, BigCount{8}, 2) == "0.12");  // 0.125 -> even
  CHECK(occupancy::format_fixed(BigCount{3}, BigCount{8}, 2) == "0.38");  // 0.375 -> even
  CHECK(occupancy::format_fixed(BigCount{1}, BigCount{1}, 3) == "1.000");
  CHECK(occupancy::format_fixed(BigCount{2}, BigCount{3}, 0) == "1");
  CHECK(occupancy::format_fixed(BigCount{1}, BigCount{30}, 6) == "0.033333");
  CHECK(occupancy::format_probability(BigCount{1}, BigCount{1}, 6) == "1");
  CHECK(occupancy::format_probability(BigCount{1}, BigCount{2}, 6) == "0.500000");
  CHECK_THROWS_AS(occupancy::format_fixed(BigCount{1}, BigCount{0}, 2), occupancy::DomainError);
}

TEST_CASE("scientific ratios") {
  CHECK(occupancy::format_ratio_scientific(occupancy::factorial(10), BigCount::pow(10, 10), 4) == "3.629E-04");
  CHECK(occupancy::format_ratio_scientific(occupancy::factorial(20), BigCount::pow(20, 20), 4) == "2.320E-08");
  CHECK(occupancy::format_ratio_scientific(occupancy::factorial(50), BigCount::pow(50, 50), 4) == "3.424E-21");
  CHECK(occupancy::format_ratio_scientific(BigCount{1}, BigCount{1}, 3) == "1.00E+00");
  CHECK(occupancy::format_ratio_scientific(BigCount{250}, BigCount{1}, 2) == "2.5E+02");
  CHECK(occupancy::format_ratio_scientific(BigCount{9999}, BigCount{100000}, 2) == "1.0E-01");
}

TEST_CASE("format_real") {
  CHECK(occupancy::format_real(0.541610040220442, 6) == "0.541610");
  CHECK(occupancy::format_real(-1e-17, 6) == "0.000000");
  CHECK(occupancy::format_real(1.5, 0) == "2");
}

TEST_CASE("parse_occupancy") {
  auto p = occupancy::parse_occupancy("{2,2,1}");
  CHECK(p.bracket == occupancy::Bracket::multiset);
  CHECK(p.values == V{2, 2, 1});
  p = occupancy::parse_occupancy("  [ 3, 3 ,4 ] ");
  CHECK(p.bracket == occupancy::Bracket::ordered);
  CHECK(p.values == V{3, 3, 4});
  CHECK(occupancy::parse_occupancy("{2, 1, 0}").values == V{2, 1, 0});
  CHECK(occupancy::parse_occupancy("{7}").values == V{7});
  for (const char* bad : {"", "{}", "{1,,2}", "(1,2)", "{1,2]", "{-1}", "{1.5}", "{a}", "{1, 2,}"}) {
    CHECK_THROWS_AS(occupancy::parse_occupancy(bad), occupancy::DomainError);
  }
}
