#pragma once

#include <parpole/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace parpole {

// One symbolic local factor L(lambda*s + c, chi^lambda). The character is
// never materialized; lambda is the order of the twist chi^lambda together
// with the dilation of s.
struct LKey {
  int lambda = 1;
  Rat c;

  bool operator==(const LKey&) const = default;
  bool operator<(const LKey& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    return c < o.c;
  }
};

// Finite product prod_key L(lambda s + c, chi^lambda)^exp in canonical form:
// factors sorted by key, exponents nonzero. Exponents may be negative (a
// quotient); is_product_of_L detects when none are.
struct LFactorProduct {
  std::vector<std::pair<LKey, int>> factors;

  bool operator==(const LFactorProduct&) const = default;
  bool empty() const { return factors.empty(); }
  int exponent(const LKey& k) const;
};

LFactorProduct make_product(std::vector<std::pair<LKey, int>> factors);

LFactorProduct mul(const LFactorProduct& x, const LFactorProduct& y);
LFactorProduct inverse(const LFactorProduct& x);
LFactorProduct div(const LFactorProduct& x, const LFactorProduct& y);

// Canonicalization entry point; products built through this API are already
// canonical, so this is a normalizing copy.
LFactorProduct cancel(const LFactorProduct& x);

bool is_product_of_L(const LFactorProduct& x);

// Restriction to characters of order d': keeps the factors whose twist
// contains chi^d', i.e. keys with d' | lambda.
LFactorProduct specialize(const LFactorProduct& x, int dprime);

struct PoleLocusEntry {
  Rat x;     // real part of the pole location
  int order; // positive net order
};

// Pole real parts of a specialized product, modulo the imaginary lattice.
struct PoleLocus {
  int dprime = 1;
  std::vector<PoleLocusEntry> entries; // sorted by x ascending
  std::string annotation;              // fixed lattice-translate note
};

extern const char* const kPoleLatticeAnnotation;

// Candidate pole locations are x = -c/lambda over positive-exponent keys of
// specialize(x, dprime). At each candidate the net order is maximized over
// the sublattices of allowed twists: for every divisor m of lcm(lambda of
// matching keys), sum the signed exponents of matching keys with m | lambda;
// entries with max <= 0 are cancelled and omitted.
PoleLocus pole_locus(const LFactorProduct& x, int dprime);

// "L(s, chi)"-style rendering: e.g. L(2s - 1, chi^2)^2 * L(s + 3/2, chi)^-1.
std::string to_string(const LFactorProduct& x);
std::string to_string(const LKey& k);

} // namespace parpole
