#pragma once

#include "occupancy/bigcount.hpp"
#include "occupancy/exactmath.hpp"
#include "occupancy/realization.hpp"

namespace occupancy {

/// Equal degeneracy g of every state: each state holds g indistinguishable
/// sub-states. g = 1 is the non-degenerate statistic.
class DegenerateSpec {
 public:
  explicit DegenerateSpec(unsigned g);
  unsigned g() const { return g_; }

 private:
  unsigned g_;
};

// N! / prod n_i!
BigCount weight_multinomial(const OrderedOccupancy& occ);

// Distinguishable entities in indistinguishable states:
// C(N, n_1) C(N - n_1, n_2) ... C(n_k, n_k) / prod_j r_j!
BigCount weight_di(const Realization& r);
BigCount weight_di(std::span<const unsigned> canonical_parts);

// Same weight from repetitivities alone: N! / prod_j (j!)^{r_j} r_j!.
// Throws SumMismatch unless sum_j j r_j == n_total.
BigCount weight_di_alternate(const RepetitivityVector& rep, unsigned n_total);

// weight_di(r) * prod_i B(n_i, min(n_i, g)). Unfilled states contribute 1.
BigCount weight_di_degenerate(const Realization& r, const DegenerateSpec& spec);
// Uses a prebuilt table; requires table.max_n() >= the largest part.
BigCount weight_di_degenerate(std::span<const unsigned> canonical_parts, const DegenerateSpec& spec,
                              const StirlingTable& table);

}  // namespace occupancy
