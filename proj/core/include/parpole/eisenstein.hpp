#pragma once

#include <parpole/quotient.hpp>

#include <string>
#include <vector>

namespace parpole {

struct PoleEntry {
  Rat x;          // real part
  int dprime = 1; // character order
  int order = 1;  // max net order over the quotient
};

// Candidate pole data for the degenerate Eisenstein family at one parabolic:
// the union over quotient representatives w and character orders d' <= d0 of
// the pole loci of d * c_w, merged by (x, d') with max order. N is the global
// max. Invariants recorded in `violations` when broken: |x| <= s_k + 1, and
// x + s_k + 1 lies in (1/lambda)Z for some lambda <= d0 (every pole sits at
// -(s_k+1) + (h-1)/lambda for an outside coroot height h, so the lattice
// membership holds in the variable centered at the left strip edge).
struct PoleReport {
  CartanType type;
  int node = 1;
  int d0 = 1;
  std::vector<PoleEntry> entries; // sorted by (dprime, x)
  int max_order = 0;              // N
  Rat strip_bound;                // s_k + 1
  std::vector<std::string> violations; // empty unless an invariant failed
  bool completed = true;
};

PoleReport eisenstein_poles(const ParabolicDatum& pd,
                            std::optional<Deadline> deadline = std::nullopt);

// d restricted to trivial character order: the numerator attached to the
// basic function. Equals common_denominator specialized at 1 (identity).
LFactorProduct basic_function_numerator(const ParabolicDatum& pd);

} // namespace parpole
