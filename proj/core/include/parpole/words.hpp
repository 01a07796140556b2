#pragma once

#include <parpole/checks.hpp>
#include <parpole/quotient.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace parpole {

// A word in the simple reflections, stored in application order: letters[0]
// acts first. The written form s_{i_m} ... s_{i_1} is the reverse. Letters
// are 0-based inside, 1-based in all rendered output.
struct ReducedWord {
  std::vector<int> letters;
  bool canonical = true; // false for the greedy fallback words

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const ReducedWord&) const = default;
};

// "s3 s2 s1" in written (right-to-left application) order, 1-based.
std::string to_string(const ReducedWord& w);

struct CorootSequenceResult {
  std::vector<Coord> coroots; // alpha~_(i) = w_1 ... w_{i-1}(alpha_(i)^vee)
  bool reduced = true;
  int failure_pos = -1; // 0-based position of first repeat/negative coroot
};

// Lemma-style coroot sequence by iterated reflection. A repeat or negative
// entry witnesses non-reducedness and is diagnosed, not thrown.
CorootSequenceResult coroot_sequence(const ReducedWord& w, const RootDatum& rd);

// The explicit reduced expression for the longest quotient representative:
// closed patterns for classical types and G2, greedy descent (flagged
// non-canonical) for E and F.
ReducedWord canonical_w0_word(const RootDatum& rd, int node);

enum class BraidRelation { a, b, c, d }; // lengths 2, 3, 4, 6

// Applies the braid relation at `pos` (0-based, application order), after
// validating the local pattern x,y,x,... alternating with the correct edge
// count. Verifies the documented coroot effects before returning: a commuting
// move swaps coroots at pos, pos+1; a length-3 move swaps pos, pos+2 and
// keeps the middle coroot, which equals the sum of the outer two. Throws
// std::invalid_argument on pattern mismatch.
ReducedWord braid_move(const ReducedWord& w, int pos, BraidRelation rel,
                       const RootDatum& rd);

// All (pos, relation) pairs applicable to w.
std::vector<std::pair<int, BraidRelation>> braid_moves(const ReducedWord& w,
                                                       const CartanMatrix& a);

// Expected coroot tables transcribed from the worked layouts; defined for
// ranks 2..4 classical and G2. Empty when not encoded.
std::vector<Coord> expected_coroot_table(CartanType t, int node);

struct CertifyOptions {
  std::uint64_t node_cap = 1'000'000; // braid-graph size bound
};

// Explores the full braid-move graph of canonical_w0_word and checks, for
// every labeled pair of outside coroots, that a pair whose order reverses
// somewhere in the graph is one the type's swap rule allows. Allowed pairs
// that never reverse are counted (info "unrealized_swaps"), not failed: the
// move that would swap them needs a contiguous sum triple that boundary
// index patterns cannot always assemble. Skips (with reason) nodes whose
// label families the rules do not cover and graphs exceeding the cap.
CheckReport certify_swap_rules(const RootDatum& rd, int node,
                               const CertifyOptions& opt = {});

} // namespace parpole
