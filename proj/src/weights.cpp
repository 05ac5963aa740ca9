#include "occupancy/weights.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "occupancy/errors.hpp"

namespace occupancy {

DegenerateSpec::DegenerateSpec(unsigned g) : g_(g) {
  if (g == 0) throw DomainError("degeneracy g must be at least 1");
}

BigCount weight_multinomial(const OrderedOccupancy& occ) { return multinomial(occ.n_total(), occ.slots()); }

BigCount weight_di(std::span<const unsigned> canonical_parts) {
  const unsigned n = std::accumulate(canonical_parts.begin(), canonical_parts.end(), 0U);
  BigCount w{1};
  unsigned remaining = n;
  for (unsigned p : canonical_parts) {
    w *= binomial(remaining, p);
    remaining -= p;
  }
  // equal parts sit next to each other in canonical order
  BigCount symmetry{1};
  for (std::size_t i = 0; i < canonical_parts.size();) {
    std::size_t j = i;
    while (j < canonical_parts.size() && canonical_parts[j] == canonical_parts[i]) ++j;
    if (canonical_parts[i] != 0) symmetry *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return w / symmetry;
}

BigCount weight_di(const Realization& r) { return weight_di(r.parts()); }

BigCount weight_di_alternate(const RepetitivityVector& rep, unsigned n_total) {
  if (rep.total() != n_total) {
    throw SumMismatch("weight_di_alternate: sum j r_j = " + std::to_string(rep.total()) + ", expected " +
                      std::to_string(n_total));
  }
  BigCount denom{1};
  for (auto [j, r] : rep.counts()) {
    const BigCount jf = factorial(j);
    for (unsigned t = 0; t < r; ++t) denom *= jf;
    denom *= factorial(r);
  }
  return factorial(n_total) / denom;
}

BigCount weight_di_degenerate(std::span<const unsigned> canonical_parts, const DegenerateSpec& spec,
                              const StirlingTable& table) {
  BigCount w = weight_di(canonical_parts);
  for (unsigned p : canonical_parts) w *= table.bell(p, std::min(p, spec.g()));
  return w;
}

BigCount weight_di_degenerate(const Realization& r, const DegenerateSpec& spec) {
  const StirlingTable table(r.parts().front());
  return weight_di_degenerate(r.parts(), spec, table);
}

}  // namespace occupancy
