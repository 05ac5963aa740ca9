#include <doctest.h>

#include <algorithm>
#include <vector>

#include "occupancy/errors.hpp"
#include "occupancy/exactmath.hpp"
#include "support/brute.hpp"

using occupancy::BigCount;

TEST_CASE("factorial") {
  CHECK(occupancy::factorial(0) == BigCount{1});
  CHECK(occupancy::factorial(5) == BigCount{120});
  CHECK(occupancy::factorial(20) == BigCount{"2432902008176640000"});
  for (unsigned n = 0; n <= 60; ++n) CHECK(occupancy::factorial(n) == brute::factorial(n));
}

TEST_CASE("binomial") {
  CHECK(occupancy::binomial(5, 2) == BigCount{10});
  CHECK(occupancy::binomial(0, 0) == BigCount{1});
  CHECK(occupancy::binomial(4, 2) == BigCount{6});
  CHECK(occupancy::binomial(3, 7) == BigCount{0});
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(occupancy::binomial(n, k) == brute::factorial(n) / (brute::factorial(k) * brute::factorial(n - k)));
    }
  }
}

TEST_CASE("multinomial") {
  const std::vector<unsigned> a = {2, 2, 1};
  CHECK(occupancy::multinomial(5, a) == BigCount{30});
  CHECK(occupancy::multinomial(5, a) == brute::factorial(5) / (brute::factorial(2) * brute::factorial(2)));
  const std::vector<unsigned> b = {3, 3, 4};
  CHECK(occupancy::multinomial(10, b) == BigCount{4200});
  const std::vector<unsigned> c = {5, 0, 0};
  CHECK(occupancy::multinomial(5, c) == BigCount{1});

  SUBCASE("sum mismatch") {
    CHECK_THROWS_AS(occupancy::multinomial(6, a), occupancy::SumMismatch);
  }

  SUBCASE("invariant under permutation of parts") {
    auto& gen = brute::rng();
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<unsigned> parts(1 + gen() % 6);
      unsigned n = 0;
      for (auto& p : parts) n += (p = gen() % 7);
      const BigCount ref = occupancy::multinomial(n, parts);
      std::shuffle(parts.begin(), parts.end(), gen);
      CHECK(occupancy::multinomial(n, parts) == ref);
    }
  }
}

TEST_CASE("stirling2") {
  CHECK(occupancy::stirling2(5, 3) == BigCount{25});
  CHECK(occupancy::stirling2(7, 4) == BigCount{350});
  CHECK(occupancy::stirling2(6, 1) == BigCount{1});
  CHECK(occupancy::stirling2(4, 9) == BigCount{0});
  CHECK(occupancy::stirling2(0, 0) == BigCount{1});
  CHECK(occupancy::stirling2(3, 0) == BigCount{0});

  SUBCASE("counts set partitions into exactly k blocks") {
    for (unsigned n = 1; n <= 9; ++n) {
      for (unsigned k = 1; k <= n; ++k) {
        CHECK(occupancy::stirling2(n, k) == BigCount{brute::set_partitions_exact_blocks(n, k)});
      }
    }
  }
}

TEST_CASE("StirlingTable") {
  const occupancy::StirlingTable t(25);
  CHECK(t.max_n() == 25);
  for (unsigned n = 1; n <= 25; ++n) {
    CHECK(t(n, 1) == BigCount{1});
    CHECK(t(n, n) == BigCount{1});
    for (unsigned k = 2; k < n; ++k) CHECK(t(n, k) == t(n - 1, k - 1) + BigCount{k} * t(n - 1, k));
  }
  // first rows of the triangle
  const std::vector<std::vector<std::uint64_t>> rows = {
      {1}, {1, 1}, {1, 3, 1}, {1, 7, 6, 1}, {1, 15, 25, 10, 1}, {1, 31, 90, 65, 15, 1}, {1, 63, 301, 350, 140, 21, 1}};
  for (unsigned n = 1; n <= 7; ++n) {
    for (unsigned k = 1; k <= n; ++k) CHECK(t(n, k) == BigCount{rows[n - 1][k - 1]});
  }
  CHECK_THROWS_AS(t(26, 1), std::out_of_range);
  CHECK(t.row(3).size() == 4);
}

TEST_CASE("bell_incomplete") {
  CHECK(occupancy::bell_incomplete(5, 5) == BigCount{52});
  CHECK(occupancy::bell_incomplete(10, 3) == BigCount{9842});
  CHECK(occupancy::bell_incomplete(7, 1) == BigCount{1});
  CHECK(occupancy::bell_incomplete(10, 10) == BigCount{115975});

  SUBCASE("full Bell numbers match set partition enumeration") {
    for (unsigned n = 1; n <= 9; ++n) {
      std::uint64_t count = 0;
      for (const auto& [shape, c] : brute::set_partition_shapes(n, n)) count += c;
      CHECK(occupancy::bell_incomplete(n, n) == BigCount{count});
    }
  }

  SUBCASE("non-decreasing in s, constant from s = n") {
    for (unsigned n = 1; n <= 20; ++n) {
      for (unsigned s = 2; s <= n + 3; ++s) {
        CHECK(occupancy::bell_incomplete(n, s) >= occupancy::bell_incomplete(n, s - 1));
        if (s > n) CHECK(occupancy::bell_incomplete(n, s) == occupancy::bell_incomplete(n, n));
      }
    }
  }
}

TEST_CASE("input limit guard") {
  const unsigned saved = occupancy::input_limit();
  CHECK(saved == occupancy::kDefaultInputLimit);
  occupancy::set_input_limit(10);
  CHECK_THROWS_AS(occupancy::StirlingTable(11), occupancy::InputTooLarge);
  CHECK_NOTHROW(occupancy::StirlingTable(10));
  occupancy::set_input_limit(saved);
  CHECK_THROWS_AS(occupancy::stirling2(5001, 2), occupancy::InputTooLarge);
}

TEST_CASE("BigCount basics") {
  CHECK(BigCount::pow(3, 4) == BigCount{81});
  CHECK(BigCount{"12345678901234567890123"}.to_string() == "12345678901234567890123");
  CHECK_THROWS(BigCount{"-3"});
  CHECK_THROWS_AS(BigCount{7} / BigCount{2}, std::domain_error);
  CHECK(BigCount::pow(2, 70) - BigCount::pow(2, 69) == BigCount::pow(2, 69));
  CHECK(BigCount{5} - BigCount{5} == BigCount{0});
  CHECK_THROWS_AS(BigCount{2} - BigCount{3}, std::domain_error);
  CHECK(BigCount{0}.decimal_digits() == 1);
  CHECK(BigCount{"1000000"}.decimal_digits() == 7);
  CHECK(BigCount{15}.log() == doctest::Approx(std::log(15.0)).epsilon(1e-15));
  // 1000! has 2568 digits; compare against a sum of logs
  long double ref = 0;
  for (unsigned i = 2; i <= 1000; ++i) ref += std::log(static_cast<long double>(i));
  CHECK(occupancy::factorial(1000).log() == doctest::Approx(static_cast<double>(ref)).epsilon(1e-13));
  CHECK(occupancy::ratio(BigCount{1}, BigCount{3}) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
}
