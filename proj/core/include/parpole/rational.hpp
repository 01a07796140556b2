#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace parpole {

// Exact rational scalar used everywhere a half-integer or sixth-integer can
// appear (s_k, level-set entries, L-factor shifts). Denominators stay <= 12
// in practice, so int64 never comes close to overflow.
using Rat = boost::rational<std::int64_t>;

// "7", "-5/2". Integers print without a denominator.
std::string to_string(const Rat& r);

// Inverse of to_string. Accepts "p" and "p/q". Throws std::invalid_argument.
Rat rat_from_string(const std::string& s);

struct RatHash {
  std::size_t operator()(const Rat& r) const noexcept;
};

} // namespace parpole
