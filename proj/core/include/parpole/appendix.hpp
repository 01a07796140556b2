#pragma once

#include <parpole/parabolic.hpp>
#include <parpole/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace parpole {

// Expected table row for one (type, node): the published s_k value and the
// published L(d) multisets (descending, 0 first). Classical rows come from
// closed-form generators valid for any rank; exceptional rows are static
// transcriptions.
struct AppendixRow {
  CartanType type;
  int node = 1;
  Rat printed_sk;
  std::map<int, std::vector<Rat>> printed_L; // d -> multiset, descending
};

AppendixRow appendix_row(CartanType t, int node);

// A published cell known to disagree with the derivation, with the exact
// values both ways. Comparison marks the cell allowlisted only when both
// sides match the entry; anything else is a mismatch.
struct AllowlistEntry {
  CartanType type;
  int node;
  std::string column; // "s_k" or "L(2)"...
  std::string printed;
  std::string derived;
  std::string justification;
};

const std::vector<AllowlistEntry>& appendix_allowlist();

enum class CellKind { match, allowlisted, mismatch };

struct CellDiff {
  CartanType type;
  int node;
  std::string column;
  std::string printed;
  std::string derived;
  CellKind kind = CellKind::match;
  std::string justification; // for allowlisted cells
};

// Compares the derived s_k and L(1)..L(6) against the published row.
std::vector<CellDiff> compare_row(const ParabolicDatum& pd);

} // namespace parpole
