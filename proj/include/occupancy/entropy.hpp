#pragma once

#include <span>
#include <vector>

#include "occupancy/bigcount.hpp"
#include "occupancy/realization.hpp"
#include "occupancy/weights.hpp"

namespace occupancy {

/// Dimensionless entropy per entity, in nats.
struct EntropyValue {
  double nats = 0.0;
  friend auto operator<=>(const EntropyValue&, const EntropyValue&) = default;
};

/// Probabilities over states; entries in [0,1] summing to 1 within 1e-12.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> probs);
  // p_i = n_i / N, zero-padded to s_slots.
  static ProbabilityVector from_realization(const Realization& r);
  static ProbabilityVector from_occupancy(const OrderedOccupancy& occ);

  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

// (1/N) ln W. Throws ZeroWeight when w == 0.
EntropyValue entropy_from_weight(const BigCount& w, unsigned n_total);

// (1/N) ln W_D:I
EntropyValue entropy_exact_di(const Realization& r);
// The same quantity summed term by term:
// (1/N) sum_i ((n_i/N) ln N! - ln n_i!) - (1/N) sum_j ln r_j!
EntropyValue entropy_exact_di_terms(const Realization& r);

EntropyValue entropy_exact_di_degenerate(const Realization& r, const DegenerateSpec& spec);
// Term-by-term form with the extra + ln sum_gamma {n_i gamma} per state.
EntropyValue entropy_exact_di_degenerate_terms(const Realization& r, const DegenerateSpec& spec);

// (1/N) ln W_mult
EntropyValue entropy_exact_multinomial(const OrderedOccupancy& occ);

// -sum p_i ln p_i, with 0 ln 0 = 0.
EntropyValue entropy_shannon(const ProbabilityVector& p);

// argmax over gamma in [1, min(g, n)] of {n gamma}; ties go to the smaller gamma.
unsigned gamma_sharp(unsigned n, unsigned g);
std::vector<unsigned> gamma_sharp(const Realization& r, const DegenerateSpec& spec);

// -sum p_i ln(p_i / gamma_i). Throws LengthMismatch.
EntropyValue entropy_asymptotic_degenerate(const ProbabilityVector& p, std::span<const unsigned> gammas);

// -sum p_i ln(p_i / g_i). Throws LengthMismatch.
EntropyValue entropy_mb_degenerate(const ProbabilityVector& p, std::span<const unsigned> degeneracies);

// n ln a - ln a!, the log of a^n / a!.
double jordan_stirling_approx(unsigned n, unsigned a);
// jordan_stirling_approx(n, a) - ln {n a}, from the exact surjection deficit
// a^n - a! {n a}, so it stays accurate after the plain difference rounds to 0.
// Requires 1 <= a <= n.
double jordan_log_error(unsigned n, unsigned a);

// Shannon entropy of the occupancy fractions minus the exact D:I entropy.
double shannon_gap(unsigned n_total, const Realization& r);

// Finite-N correction (1/N) ln k! that the Shannon limit drops.
double di_limit_correction(const Realization& r);
// Per-state corrections (1/N) ln gamma_i#! dropped by the degenerate limit,
// one entry per filled state.
std::vector<double> degenerate_limit_corrections(const Realization& r, const DegenerateSpec& spec);

}  // namespace occupancy
