#pragma once

#include <parpole/cartan.hpp>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace parpole {

// Coordinates in the basis of simple roots (for roots) or simple coroots
// (for coroots). Positive (co)roots have all coordinates >= 0.
using Coord = std::vector<int>;

int height(const Coord& c);

// s_i acting on root coordinates: beta -> beta - <beta, alpha_i^vee> alpha_i,
// with <beta, alpha_i^vee> = sum_j beta_j A[i][j] (row i).
Coord reflect_root(const CartanMatrix& a, int i, const Coord& beta);

// s_i acting on coroot coordinates: v -> v - <alpha_i, v> alpha_i^vee, with
// <alpha_i, v> = sum_j v_j A[j][i] (column i). The coroots of a system with
// matrix A are the roots of the transposed matrix.
Coord reflect_coroot(const CartanMatrix& a, int i, const Coord& v);

struct RootDatum {
  CartanType type;
  CartanMatrix a;

  // Sorted by (height, lex) of the root. pos_coroots[k] is the coroot of
  // pos_roots[k]; note coroot heights do not sort in the same order in
  // non-simply-laced types.
  std::vector<Coord> pos_roots;
  std::vector<Coord> pos_coroots;

  // -1 when absent.
  int root_index(const Coord& root) const;
  int coroot_index(const Coord& coroot) const;

  // Coordinates of the highest root / highest coroot (unique height maxima).
  const Coord& highest_root() const;
  const Coord& highest_coroot() const;

  std::unordered_map<std::uint64_t, int> root_lookup;
  std::unordered_map<std::uint64_t, int> coroot_lookup;
};

// Packs a nonnegative coordinate vector into a hash key (4 bits per entry;
// coordinates never exceed 6).
std::uint64_t pack_coord(const Coord& c);

// Builds the full positive system by paired reflection closure from the
// simple (root, coroot) pairs. Deterministic.
RootDatum build_root_datum(CartanType t);

} // namespace parpole
