#pragma once

#include <parpole/lfactor.hpp>
#include <parpole/rational.hpp>
#include <parpole/rootsystem.hpp>

#include <stdexcept>
#include <vector>

namespace parpole {

// Raised when a derivation violates an invariant the underlying theory
// guarantees (these must never fire on valid input).
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// One positive coroot outside the Levi: its index in the ambient datum, its
// height h and its lambda-value (coordinate at the parabolic's node).
struct CorootLine {
  int index;
  int h;
  int lambda;
};

// m(h, lambda): number of coroots of a given inversion set with height h and
// lambda-value lambda. Indexed 1 <= h <= hmax, 1 <= lambda <= d0; zero
// outside. The full profile (all coroots outside the Levi) is the w0 case.
struct Profile {
  int hmax = 0;
  int d0 = 0;
  std::vector<std::int32_t> m;

  int at(int h, int lambda) const {
    if (h < 1 || h > hmax || lambda < 1 || lambda > d0) return 0;
    return m[static_cast<std::size_t>(lambda - 1) * hmax + (h - 1)];
  }
  void add(int h, int lambda, int delta) {
    m[static_cast<std::size_t>(lambda - 1) * hmax + (h - 1)] += delta;
  }
};

// One (s_i, lambda_i) with multiplicity; Lambda is the whole multiset.
struct LambdaEntry {
  Rat s;
  int lambda;
  int multiplicity;
};

// L(d): real parts (modulo the imaginary lattice) with multiplicity,
// sorted descending so 0 leads, matching table layouts.
struct LevelSet {
  int d = 1;
  std::vector<Rat> entries;
};

struct ParabolicDatum {
  RootDatum rd;
  int node = 1; // 1-based

  std::vector<CorootLine> outside; // coroots with lambda >= 1, ambient order
  Profile full;                    // profile of the longest quotient element

  int kappa = 0; // <2 rho_P, alpha_node^vee> = 2(s_k + 1)
  Rat s_k;
  int d0 = 1; // max lambda-value = node-mark of the highest coroot

  std::vector<LambdaEntry> lambda; // good ordering: s/lambda ascending
};

// Derives every field. Enforced invariants (InvariantViolation on failure):
// kappa = hmax(lambda=1) + 1; every s_i >= 0; the final Lambda entry is the
// unique (lambda = 1, s = s_k) entry with multiplicity 1 and every other
// entry has s/lambda < s_k; d0 equals the node-mark of the highest coroot.
ParabolicDatum build_parabolic(const RootDatum& rd, int node);

// L(d) for d = 1..d0. Entry reals are (s_i+1)/d - (s_k+1) over lambda_i = d.
std::vector<LevelSet> level_sets(const ParabolicDatum& pd);

// L_d: union of L(lambda_i) over d | lambda_i (real parts). L_1 satisfies
// 0 >= r > -(s_k+1) with r = 0 attained exactly once.
LevelSet level_set_union(const ParabolicDatum& pd, int d);

// a_{P|P}: keys (lambda_i, s_i + 1).
LFactorProduct intertwining_normalizer(const ParabolicDatum& pd);

// a_{P|P^op}: keys (lambda_i, -s_i).
LFactorProduct opposite_normalizer(const ParabolicDatum& pd);

// Right-drop product of a profile: exponent max(0, m(h)-m(h+1)) at key
// (lambda, lambda(s_k+1) - h). For the full profile this is a_{w0}.
LFactorProduct right_drop_product(const ParabolicDatum& pd, const Profile& p);

// Left-drop product of the full profile: exponent max(0, m(h)-m(h-1)) at key
// (lambda, lambda(s_k+1) - h + 1). This is d, the common denominator.
LFactorProduct common_denominator(const ParabolicDatum& pd);

// c_w as a product over the inversion-set profile: per (h, lambda),
// L(lambda s + lambda(s_k+1) - h) / L(lambda s + lambda(s_k+1) - h + 1),
// collected with telescoping cancellation.
LFactorProduct cw_product(const ParabolicDatum& pd, const Profile& p);

} // namespace parpole
