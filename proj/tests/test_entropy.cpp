#include <doctest.h>

#include <cmath>
#include <vector>

#include "occupancy/entropy.hpp"
#include "occupancy/errors.hpp"
#include "occupancy/exactmath.hpp"
#include "support/brute.hpp"

using doctest::Approx;
using occupancy::BigCount;
using occupancy::DegenerateSpec;
using occupancy::ProbabilityVector;
using occupancy::Realization;
using V = std::vector<unsigned>;

namespace {
Realization R(V parts) { return Realization(parts, static_cast<unsigned>(parts.size())); }
constexpr double kTight = 1e-12;
}  // namespace

TEST_CASE("entropy_from_weight") {
  CHECK(occupancy::entropy_from_weight(BigCount{15}, 5).nats == Approx(0.541610040220442).epsilon(kTight));
  CHECK(occupancy::entropy_from_weight(BigCount{1}, 17).nats == 0.0);
  CHECK(occupancy::entropy_from_weight(BigCount{2520}, 10).nats == Approx(0.7832014180505469).epsilon(kTight));
  CHECK_THROWS_AS(occupancy::entropy_from_weight(BigCount{0}, 3), occupancy::ZeroWeight);

  // 7.40E+44-sized weight: ln W from bit length and mantissa
  const BigCount big{"740265397528575488041092575580670044000000000"};
  CHECK(occupancy::entropy_from_weight(big, 50).nats == Approx(std::log(7.40265397528575488e44) / 50).epsilon(1e-13));
}

TEST_CASE("entropy_exact_di and its term expansion") {
  CHECK(occupancy::entropy_exact_di(R({2, 2, 1})).nats == Approx(0.541610040220442).epsilon(kTight));
  CHECK(occupancy::entropy_exact_di(R({9})).nats == 0.0);
  CHECK(occupancy::entropy_exact_di(R(V(9, 1))).nats == Approx(0.0).epsilon(kTight));

  for (unsigned n = 1; n <= 12; ++n) {
    for (const auto& r : occupancy::partitions(n, n)) {
      const double direct = std::log(occupancy::weight_di(r).to_double()) / n;
      CHECK(std::abs(occupancy::entropy_exact_di(r).nats - direct) < 1e-10);
      CHECK(std::abs(occupancy::entropy_exact_di_terms(r).nats - occupancy::entropy_exact_di(r).nats) < 1e-10);
    }
  }
}

TEST_CASE("entropy_exact_di_degenerate and its term expansion") {
  CHECK(occupancy::entropy_exact_di_degenerate(R({2, 2, 1}), DegenerateSpec(1)).nats ==
        Approx(0.541610040220442).epsilon(kTight));
  CHECK(occupancy::entropy_exact_di_degenerate(R({2}), DegenerateSpec(2)).nats ==
        Approx(0.34657359027997264).epsilon(kTight));
  for (unsigned g = 1; g <= 5; ++g) {
    CHECK(occupancy::entropy_exact_di_degenerate(R(V(6, 1)), DegenerateSpec(g)).nats == Approx(0.0).epsilon(kTight));
  }
  for (unsigned g = 1; g <= 3; ++g) {
    for (unsigned n = 1; n <= 12; ++n) {
      for (const auto& r : occupancy::partitions(n, n)) {
        const DegenerateSpec spec(g);
        CHECK(std::abs(occupancy::entropy_exact_di_degenerate_terms(r, spec).nats -
                       occupancy::entropy_exact_di_degenerate(r, spec).nats) < 1e-10);
      }
    }
  }
}

TEST_CASE("entropy_shannon") {
  CHECK(occupancy::entropy_shannon(ProbabilityVector({1.0 / 3, 1.0 / 3, 1.0 / 3})).nats ==
        Approx(std::log(3.0)).epsilon(kTight));
  CHECK(occupancy::entropy_shannon(ProbabilityVector({1, 0, 0})).nats == 0.0);
  CHECK(occupancy::entropy_shannon(ProbabilityVector({0.5, 0.25, 0.25})).nats ==
        Approx(1.0397207708399179).epsilon(kTight));
  CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), occupancy::DomainError);
  CHECK_THROWS_AS(ProbabilityVector({1.5, -0.5}), occupancy::DomainError);

  SUBCASE("uniform maximizes over a grid") {
    const double step = 0.05;
    for (unsigned s = 2; s <= 4; ++s) {
      const double uniform = std::log(static_cast<double>(s));
      std::vector<int> ticks(s - 1, 0);
      const int steps = static_cast<int>(std::round(1.0 / step));
      while (true) {
        int used = 0;
        for (int t : ticks) used += t;
        if (used <= steps) {
          std::vector<double> p;
          for (int t : ticks) p.push_back(t * step);
          p.push_back((steps - used) * step);
          double sum = 0;
          for (double x : p) sum += x;
          p.back() += 1.0 - sum;
          if (p.back() < 0) p.back() = 0;
          CHECK(occupancy::entropy_shannon(ProbabilityVector(p)).nats <= uniform + 1e-12);
        }
        std::size_t i = 0;
        while (i < ticks.size() && ++ticks[i] > steps) ticks[i++] = 0;
        if (i == ticks.size()) break;
      }
    }
  }

  SUBCASE("matches a long double evaluation") {
    const std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
    CHECK(occupancy::entropy_shannon(ProbabilityVector(p)).nats == Approx(brute::shannon(p)).epsilon(kTight));
  }
}

TEST_CASE("gamma_sharp") {
  CHECK(occupancy::gamma_sharp(7, 7) == 4);
  CHECK(occupancy::gamma_sharp(5, 2) == 2);
  for (unsigned g = 1; g <= 4; ++g) CHECK(occupancy::gamma_sharp(1, g) == 1);
  // {2 1} = {2 2} = 1: ties go to the smaller gamma
  CHECK(occupancy::gamma_sharp(2, 2) == 1);
  CHECK(occupancy::gamma_sharp(7, 3) == 3);
  CHECK(occupancy::gamma_sharp(R({7, 5, 1}), DegenerateSpec(7)) == V{4, 3, 1});
}

TEST_CASE("entropy_asymptotic_degenerate") {
  const ProbabilityVector uniform({1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(occupancy::entropy_asymptotic_degenerate(uniform, V{1, 1, 1}).nats == Approx(std::log(3.0)).epsilon(kTight));
  CHECK(occupancy::entropy_asymptotic_degenerate(ProbabilityVector({1.0}), V{4}).nats ==
        Approx(1.3862943611198906).epsilon(kTight));
  CHECK(occupancy::entropy_asymptotic_degenerate(ProbabilityVector({1, 0, 0}), V{1, 5, 9}).nats == 0.0);
  CHECK_THROWS_AS(occupancy::entropy_asymptotic_degenerate(uniform, V{1, 1}), occupancy::LengthMismatch);

  SUBCASE("all gammas one is the Shannon function; gammas as degeneracies give the MB form") {
    auto& gen = brute::rng();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> w(2 + gen() % 4);
      double sum = 0;
      for (auto& x : w) sum += (x = (gen() % 100) + 1);
      for (auto& x : w) x /= sum;
      const ProbabilityVector p(w);
      CHECK(occupancy::entropy_asymptotic_degenerate(p, V(w.size(), 1)).nats ==
            Approx(occupancy::entropy_shannon(p).nats).epsilon(kTight));
      V g(w.size());
      for (auto& x : g) x = 1 + gen() % 5;
      CHECK(occupancy::entropy_asymptotic_degenerate(p, g).nats ==
            Approx(occupancy::entropy_mb_degenerate(p, g).nats).epsilon(kTight));
    }
  }
}

TEST_CASE("entropy_mb_degenerate") {
  for (unsigned s = 1; s <= 6; ++s) {
    const ProbabilityVector p(std::vector<double>(s, 1.0 / s));
    CHECK(occupancy::entropy_mb_degenerate(p, V(s, 1)).nats == Approx(std::log(static_cast<double>(s))).epsilon(1e-12));
  }
  CHECK(occupancy::entropy_mb_degenerate(ProbabilityVector({0.5, 0.5}), V{2, 2}).nats ==
        Approx(1.3862943611198906).epsilon(kTight));
  CHECK(occupancy::entropy_mb_degenerate(ProbabilityVector({1, 0}), V{3, 3}).nats ==
        Approx(1.0986122886681098).epsilon(kTight));
  CHECK_THROWS_AS(occupancy::entropy_mb_degenerate(ProbabilityVector({1}), V{1, 2}), occupancy::LengthMismatch);
}

TEST_CASE("jordan_stirling_approx") {
  for (unsigned n = 1; n <= 30; ++n) CHECK(occupancy::jordan_stirling_approx(n, 1) == Approx(0.0));
  CHECK(occupancy::jordan_stirling_approx(10, 2) == Approx(6.238324625039508).epsilon(kTight));
  CHECK(occupancy::stirling2(10, 2).log() == Approx(6.236369590203704).epsilon(kTight));

  for (unsigned a : {2U, 3U}) {
    double previous = INFINITY;
    for (unsigned n = 10; n <= 60; ++n) {
      const double exact = occupancy::stirling2(n, a).log();
      const double rel = occupancy::jordan_log_error(n, a) / exact;
      CHECK(rel > 0.0);
      CHECK(rel < previous);
      previous = rel;
    }
  }
}

TEST_CASE("jordan_log_error") {
  // {n 2} = 2^(n-1) - 1, so the error is -ln(1 - 2^(1-n)).
  for (unsigned n = 2; n <= 80; ++n) {
    const double expected = -std::log1p(-std::ldexp(1.0, 1 - static_cast<int>(n)));
    CHECK(occupancy::jordan_log_error(n, 2) == Approx(expected).epsilon(1e-12));
  }
  CHECK(occupancy::jordan_log_error(7, 7) == Approx(occupancy::jordan_stirling_approx(7, 7)).epsilon(1e-12));
  CHECK(occupancy::jordan_log_error(10, 2) ==
        Approx(6.238324625039508 - 6.236369590203704).epsilon(1e-9));
  CHECK_THROWS_AS(occupancy::jordan_log_error(3, 4), occupancy::DomainError);
  CHECK_THROWS_AS(occupancy::jordan_log_error(3, 0), occupancy::DomainError);
}

TEST_CASE("shannon_gap and limit corrections") {
  CHECK(occupancy::shannon_gap(7, R({7})) == Approx(0.0));
  CHECK(occupancy::shannon_gap(10, R({5, 3, 2})) == Approx(0.24645159601402677).epsilon(1e-10));
  CHECK_THROWS_AS(occupancy::shannon_gap(9, R({5, 3, 2})), occupancy::SumMismatch);

  CHECK(occupancy::di_limit_correction(R({5, 3, 2})) == Approx(std::log(6.0) / 10).epsilon(kTight));
  const auto corr = occupancy::degenerate_limit_corrections(R({7, 5}), DegenerateSpec(7));
  REQUIRE(corr.size() == 2);
  CHECK(corr[0] == Approx(std::log(24.0) / 12).epsilon(kTight));  // gamma# = 4
  CHECK(corr[1] == Approx(std::log(6.0) / 12).epsilon(kTight));   // gamma# = 3
}
