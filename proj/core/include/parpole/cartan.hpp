#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parpole {

// Split simple types, Bourbaki numbering throughout. Nodes are 1-based in
// every public interface.
enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Series series;
  int rank;

  bool operator==(const CartanType&) const = default;
};

// Rank bounds accepted by this build: A_1..A_12, B_2..B_12, C_2..C_12,
// D_3..D_12, E_6..E_8, F_4, G_2. The cap keeps inversion sets inside 128
// bits for the largest supported parabolic quotients.
inline constexpr int kMaxRank = 12;

bool is_valid(CartanType t);

std::string to_string(CartanType t);

// Parses "E8", "B4", "G2"... Throws std::invalid_argument on junk.
CartanType type_from_string(const std::string& s);

// A[i][j] = <alpha_j, alpha_i^vee>, 0-based indices. Rows pair roots against
// a fixed coroot; columns pair coroots against a fixed root.
using CartanMatrix = std::vector<std::vector<int>>;

CartanMatrix cartan_matrix(CartanType t);

// Number of Dynkin-diagram edges between i and j: A[i][j]*A[j][i], in
// {0,1,2,3}. Braid order m_ij is 2,3,4,6 respectively.
int edge_count(const CartanMatrix& a, int i, int j);

std::uint64_t weyl_order(CartanType t);

// Order of the Weyl group of the diagram with 1-based `node` deleted, i.e.
// of the standard Levi attached to the maximal parabolic at that node.
std::uint64_t levi_weyl_order(CartanType t, int node);

// Order of the Weyl group of an arbitrary sub-diagram (0-based node set).
std::uint64_t subdiagram_weyl_order(const CartanMatrix& a, const std::vector<int>& nodes);

} // namespace parpole
