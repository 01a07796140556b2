#include <parpole/lfactor.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace parpole {

const char* const kPoleLatticeAnnotation =
    "modulo 2π√−1/log q lattice translates";

int LFactorProduct::exponent(const LKey& k) const {
  auto it = std::lower_bound(factors.begin(), factors.end(), k,
                             [](const auto& f, const LKey& key) { return f.first < key; });
  if (it != factors.end() && it->first == k) return it->second;
  return 0;
}

LFactorProduct make_product(std::vector<std::pair<LKey, int>> factors) {
  std::map<LKey, int> acc;
  for (auto& [k, e] : factors) acc[k] += e;
  LFactorProduct out;
  for (auto& [k, e] : acc)
    if (e != 0) out.factors.emplace_back(k, e);
  return out;
}

LFactorProduct mul(const LFactorProduct& x, const LFactorProduct& y) {
  std::vector<std::pair<LKey, int>> all = x.factors;
  all.insert(all.end(), y.factors.begin(), y.factors.end());
  return make_product(std::move(all));
}

LFactorProduct inverse(const LFactorProduct& x) {
  LFactorProduct out = x;
  for (auto& [k, e] : out.factors) e = -e;
  return out;
}

LFactorProduct div(const LFactorProduct& x, const LFactorProduct& y) {
  return mul(x, inverse(y));
}

LFactorProduct cancel(const LFactorProduct& x) {
  return make_product(x.factors);
}

bool is_product_of_L(const LFactorProduct& x) {
  return std::all_of(x.factors.begin(), x.factors.end(),
                     [](const auto& f) { return f.second > 0; });
}

LFactorProduct specialize(const LFactorProduct& x, int dprime) {
  LFactorProduct out;
  for (const auto& f : x.factors)
    if (f.first.lambda % dprime == 0) out.factors.push_back(f);
  return out;
}

PoleLocus pole_locus(const LFactorProduct& x, int dprime) {
  PoleLocus locus;
  locus.dprime = dprime;
  locus.annotation = kPoleLatticeAnnotation;

  LFactorProduct p = specialize(x, dprime);

  // candidates: zeros of lambda*s + c over positive-exponent keys
  std::set<Rat> candidates;
  for (const auto& [k, e] : p.factors)
    if (e > 0) candidates.insert(-k.c / k.lambda);

  for (const Rat& cand : candidates) {
    // keys vanishing at cand, i.e. lambda*cand + c = 0
    std::vector<std::pair<LKey, int>> active;
    long long lcm = 1;
    for (const auto& [k, e] : p.factors)
      if (Rat(k.lambda) * cand + k.c == Rat(0)) {
        active.emplace_back(k, e);
        lcm = std::lcm(lcm, static_cast<long long>(k.lambda));
      }
    // The imaginary offsets of L(lambda s + c, chi^lambda)'s pole set form
    // (1/lambda) of the ambient lattice; a shared offset class exists for a
    // subset iff their lambdas share a divisor pattern. Maximize the net
    // order over divisor classes m | lcm; m = 1 is the zero offset class.
    int best = 0;
    for (long long m = 1; m <= lcm; ++m) {
      if (lcm % m != 0) continue;
      int ord = 0;
      for (const auto& [k, e] : active)
        if (k.lambda % m == 0) ord += e;
      best = std::max(best, ord);
    }
    if (best > 0) locus.entries.push_back({cand, best});
  }
  std::sort(locus.entries.begin(), locus.entries.end(),
            [](const PoleLocusEntry& a, const PoleLocusEntry& b) { return a.x < b.x; });
  return locus;
}

std::string to_string(const LKey& k) {
  std::string arg;
  if (k.lambda == 1) arg = "s";
  else arg = std::to_string(k.lambda) + "s";
  if (k.c != Rat(0)) {
    arg += (k.c > Rat(0)) ? " + " : " - ";
    arg += to_string(boost::abs(k.c));
  }
  std::string chi = k.lambda == 1 ? "chi" : "chi^" + std::to_string(k.lambda);
  return "L(" + arg + ", " + chi + ")";
}

std::string to_string(const LFactorProduct& x) {
  if (x.factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < x.factors.size(); ++i) {
    if (i) out += " * ";
    out += to_string(x.factors[i].first);
    if (x.factors[i].second != 1)
      out += "^" + std::to_string(x.factors[i].second);
  }
  return out;
}

} // namespace parpole
