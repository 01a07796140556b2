#include <parpole/eisenstein.hpp>

#include <map>
#include <sstream>
#include <unordered_set>

namespace parpole {

namespace {

std::uint64_t profile_hash(const Profile& p) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(p.hmax));
  for (std::int32_t m : p.m) mix(static_cast<std::uint64_t>(m) + 1);
  return h;
}

} // namespace

PoleReport eisenstein_poles(const ParabolicDatum& pd,
                            std::optional<Deadline> deadline) {
  PoleReport rep;
  rep.type = pd.rd.type;
  rep.node = pd.node;
  rep.d0 = pd.d0;
  rep.strip_bound = pd.s_k + 1;

  const LFactorProduct d = common_denominator(pd);
  std::map<std::pair<int, Rat>, int> best; // (dprime, x) -> max order
  std::unordered_set<std::uint64_t> seen;  // distinct profiles give distinct c_w

  EnumCallbacks cb;
  cb.on_rep = [&](const CosetRep&, const Profile& prof) {
    if (!seen.insert(profile_hash(prof)).second) return;
    LFactorProduct dc = mul(d, cw_product(pd, prof));
    for (int dp = 1; dp <= pd.d0; ++dp) {
      PoleLocus locus = pole_locus(dc, dp);
      for (const PoleLocusEntry& e : locus.entries) {
        int& slot = best[{dp, e.x}];
        slot = std::max(slot, e.order);
      }
    }
  };
  EnumResult er = enumerate_quotient(pd, cb, deadline);
  rep.completed = er.completed;

  for (const auto& [key, order] : best) {
    PoleEntry e;
    e.dprime = key.first;
    e.x = key.second;
    e.order = order;
    rep.entries.push_back(e);
    rep.max_order = std::max(rep.max_order, order);

    if (boost::abs(e.x) > rep.strip_bound) {
      std::ostringstream os;
      os << "pole at " << to_string(e.x) << " (order " << e.order
         << ", character order " << e.dprime << ") outside |Re| <= "
         << to_string(rep.strip_bound);
      rep.violations.push_back(os.str());
    }
    Rat shifted = e.x + rep.strip_bound; // x + s_k + 1 = (h-1)/lambda
    if (shifted.denominator() > pd.d0) {
      std::ostringstream os;
      os << "pole at " << to_string(e.x) << " not on the (1/lambda) lattice "
         << "through -(s_k+1) for any lambda <= " << pd.d0;
      rep.violations.push_back(os.str());
    }
  }
  return rep;
}

LFactorProduct basic_function_numerator(const ParabolicDatum& pd) {
  return specialize(common_denominator(pd), 1);
}

} // namespace parpole
