#include "occupancy/entropy.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "occupancy/errors.hpp"
#include "occupancy/exactmath.hpp"

namespace occupancy {

namespace {

constexpr double kProbabilitySumTolerance = 1e-12;

double ln_factorial(unsigned n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

ProbabilityVector fractions(std::span<const unsigned> occupancies, std::size_t pad_to) {
  const double n = std::accumulate(occupancies.begin(), occupancies.end(), 0.0);
  std::vector<double> p;
  p.reserve(std::max(pad_to, occupancies.size()));
  for (unsigned v : occupancies) p.push_back(v / n);
  p.resize(std::max(pad_to, occupancies.size()), 0.0);
  return ProbabilityVector(std::move(p));
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability outside [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw DomainError("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

ProbabilityVector ProbabilityVector::from_realization(const Realization& r) {
  return fractions(r.parts(), r.s_slots());
}

ProbabilityVector ProbabilityVector::from_occupancy(const OrderedOccupancy& occ) {
  return fractions(occ.slots(), occ.s_slots());
}

EntropyValue entropy_from_weight(const BigCount& w, unsigned n_total) {
  if (w.is_zero()) throw ZeroWeight("entropy of a zero weight is undefined");
  if (n_total == 0) throw DomainError("entropy: N must be positive");
  return {w.log() / n_total};
}

EntropyValue entropy_exact_di(const Realization& r) { return entropy_from_weight(weight_di(r), r.n_total()); }

EntropyValue entropy_exact_di_terms(const Realization& r) {
  const double n = r.n_total();
  const double ln_n_fact = ln_factorial(r.n_total());
  double state_sum = 0.0;
  for (unsigned p : r.parts()) state_sum += (p / n) * ln_n_fact - ln_factorial(p);
  double rep_sum = 0.0;
  const RepetitivityVector rep = repetitivity(r);
  for (auto [j, count] : rep.counts()) rep_sum += ln_factorial(count);
  return {state_sum / n - rep_sum / n};
}

EntropyValue entropy_exact_di_degenerate(const Realization& r, const DegenerateSpec& spec) {
  return entropy_from_weight(weight_di_degenerate(r, spec), r.n_total());
}

EntropyValue entropy_exact_di_degenerate_terms(const Realization& r, const DegenerateSpec& spec) {
  const StirlingTable table(r.parts().front());
  const double n = r.n_total();
  const double ln_n_fact = ln_factorial(r.n_total());
  double state_sum = 0.0;
  for (unsigned p : r.parts()) {
    state_sum += (p / n) * ln_n_fact - ln_factorial(p) + table.bell(p, std::min(p, spec.g())).log();
  }
  double rep_sum = 0.0;
  const RepetitivityVector rep = repetitivity(r);
  for (auto [j, count] : rep.counts()) rep_sum += ln_factorial(count);
  return {state_sum / n - rep_sum / n};
}

EntropyValue entropy_exact_multinomial(const OrderedOccupancy& occ) {
  return entropy_from_weight(weight_multinomial(occ), occ.n_total());
}

EntropyValue entropy_shannon(const ProbabilityVector& p) {
  double h = 0.0;
  for (double v : p.probs()) h -= xlogx(v);
  return {h};
}

unsigned gamma_sharp(unsigned n, unsigned g) {
  if (n == 0 || g == 0) throw DomainError("gamma_sharp: n and g must be positive");
  const StirlingTable table(n);
  unsigned best = 1;
  for (unsigned gamma = 2; gamma <= std::min(g, n); ++gamma) {
    if (table(n, gamma) > table(n, best)) best = gamma;
  }
  return best;
}

std::vector<unsigned> gamma_sharp(const Realization& r, const DegenerateSpec& spec) {
  std::vector<unsigned> out;
  out.reserve(r.filled());
  for (unsigned p : r.parts()) out.push_back(gamma_sharp(p, spec.g()));
  return out;
}

namespace {

EntropyValue weighted_shannon(const ProbabilityVector& p, std::span<const unsigned> weights, const char* what) {
  if (weights.size() != p.size()) {
    throw LengthMismatch(std::string(what) + ": " + std::to_string(p.size()) + " probabilities but " +
                         std::to_string(weights.size()) + " weights");
  }
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (weights[i] == 0) throw DomainError(std::string(what) + ": weights must be positive");
    const double pi = p.probs()[i];
    if (pi > 0.0) h -= pi * std::log(pi / weights[i]);
  }
  return {h};
}

}  // namespace

EntropyValue entropy_asymptotic_degenerate(const ProbabilityVector& p, std::span<const unsigned> gammas) {
  return weighted_shannon(p, gammas, "entropy_asymptotic_degenerate");
}

EntropyValue entropy_mb_degenerate(const ProbabilityVector& p, std::span<const unsigned> degeneracies) {
  return weighted_shannon(p, degeneracies, "entropy_mb_degenerate");
}

double jordan_stirling_approx(unsigned n, unsigned a) {
  if (a == 0) throw DomainError("jordan_stirling_approx: a must be positive");
  return n * std::log(static_cast<double>(a)) - ln_factorial(a);
}

double jordan_log_error(unsigned n, unsigned a) {
  if (a == 0 || a > n) throw DomainError("jordan_log_error: need 1 <= a <= n");
  const BigCount power = BigCount::pow(a, n);
  const BigCount onto = factorial(a) * stirling2(n, a);
  const BigCount deficit = power - onto;
  return -std::log1p(-ratio(deficit, power));
}

double shannon_gap(unsigned n_total, const Realization& r) {
  if (n_total != r.n_total()) {
    throw SumMismatch("shannon_gap: realization sums to " + std::to_string(r.n_total()));
  }
  return entropy_shannon(ProbabilityVector::from_realization(r)).nats - entropy_exact_di(r).nats;
}

double di_limit_correction(const Realization& r) {
  return ln_factorial(static_cast<unsigned>(r.filled())) / r.n_total();
}

std::vector<double> degenerate_limit_corrections(const Realization& r, const DegenerateSpec& spec) {
  std::vector<double> out;
  for (unsigned gamma : gamma_sharp(r, spec)) out.push_back(ln_factorial(gamma) / r.n_total());
  return out;
}

}  // namespace occupancy
