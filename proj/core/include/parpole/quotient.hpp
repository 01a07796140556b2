#pragma once

#include <parpole/parabolic.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace parpole {

// Inversion set of a quotient representative, as a bitset over the outside
// coroots (pd.outside order). At most 128 outside coroots are supported.
struct InvBits {
  std::uint64_t lo = 0, hi = 0;

  bool operator==(const InvBits&) const = default;
  bool operator<(const InvBits& o) const {
    if (hi != o.hi) return hi < o.hi;
    return lo < o.lo;
  }
  bool test(int i) const {
    return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
  }
  void set(int i) {
    if (i < 64) lo |= std::uint64_t{1} << i;
    else hi |= std::uint64_t{1} << (i - 64);
  }
  int count() const;
};

struct InvBitsHash {
  std::size_t operator()(const InvBits& b) const noexcept;
};

struct CosetRep {
  InvBits inv;
  int length = 0;
};

// Covering edge w -> s_i w in the weak order on the quotient: the child's
// inversion set is the parent's plus one new outside coroot gamma = w^{-1}
// alpha_i^vee.
struct CoveringEdge {
  const CosetRep& parent;
  const Profile& parent_profile;
  int simple;      // 0-based i
  int new_coroot;  // index into pd.outside
};

struct QuotientStats {
  std::uint64_t reps = 0;
  std::uint64_t edges = 0;
  std::vector<std::uint64_t> by_length; // histogram, index = length
  int max_length = 0;
};

struct EnumResult {
  QuotientStats stats;
  bool completed = true; // false when the deadline cut enumeration short
};

using Deadline = std::chrono::steady_clock::time_point;

struct EnumCallbacks {
  // Called once per representative, layers in increasing length, each layer
  // sorted by inversion bitset. The profile is the rep's inversion profile.
  std::function<void(const CosetRep&, const Profile&)> on_rep;
  // Called once per covering edge, grouped by parent.
  std::function<void(const CoveringEdge&)> on_edge;
};

// Breadth-first enumeration of the minimal-length coset representatives of
// the parabolic quotient, streaming two layers at a time. Children are found
// by left multiplication: gamma = w^{-1} alpha_i^vee read off the tracked
// inverse-action matrix; valid children have gamma positive with lambda >= 1.
// The deadline, when given, is polled between layers.
EnumResult enumerate_quotient(const ParabolicDatum& pd, const EnumCallbacks& cb,
                              std::optional<Deadline> deadline = std::nullopt);

// Stats-only convenience.
QuotientStats quotient_stats(const ParabolicDatum& pd);

// |W| / |W_M|, the expected representative count.
std::uint64_t expected_quotient_size(const ParabolicDatum& pd);

// Profile of an arbitrary inversion set.
Profile profile_of(const ParabolicDatum& pd, const InvBits& inv);

} // namespace parpole
