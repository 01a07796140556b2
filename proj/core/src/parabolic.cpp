#include <parpole/parabolic.hpp>

#include <algorithm>
#include <map>

namespace parpole {

namespace {

// s = h - lambda*(s_k+1) = (2h - lambda*kappa)/2, the shift attached to a
// right drop at (h, lambda).
Rat drop_s(int h, int lambda, int kappa) {
  return Rat(2 * h - lambda * kappa, 2);
}

} // namespace

ParabolicDatum build_parabolic(const RootDatum& rd, int node) {
  const int n = rd.type.rank;
  if (node < 1 || node > n)
    throw std::invalid_argument("node out of range for " + to_string(rd.type));
  const int ell = node - 1;

  ParabolicDatum pd;
  pd.rd = rd;
  pd.node = node;

  int hmax = 0, d0 = 0;
  for (int k = 0; k < static_cast<int>(rd.pos_coroots.size()); ++k) {
    const Coord& v = rd.pos_coroots[k];
    if (v[ell] < 1) continue;
    int h = height(v);
    pd.outside.push_back({k, h, v[ell]});
    hmax = std::max(hmax, h);
    d0 = std::max(d0, v[ell]);
  }
  pd.d0 = d0;
  if (d0 != rd.highest_coroot()[ell])
    throw InvariantViolation("d0 differs from the highest-coroot mark at " +
                             to_string(rd.type) + " node " + std::to_string(node));

  pd.full.hmax = hmax;
  pd.full.d0 = d0;
  pd.full.m.assign(static_cast<std::size_t>(hmax) * d0, 0);
  for (const CorootLine& line : pd.outside) pd.full.add(line.h, line.lambda, 1);

  // kappa = <2 rho_P, alpha_node^vee>, 2 rho_P the sum of positive roots
  // outside the Levi (root coordinates this time).
  Coord two_rho(n, 0);
  for (const Coord& beta : rd.pos_roots)
    if (beta[ell] >= 1)
      for (int j = 0; j < n; ++j) two_rho[j] += beta[j];
  int kappa = 0;
  for (int j = 0; j < n; ++j) kappa += two_rho[j] * rd.a[ell][j];
  pd.kappa = kappa;
  pd.s_k = Rat(kappa - 2, 2);

  int hmax1 = 0;
  for (int h = 1; h <= hmax; ++h)
    if (pd.full.at(h, 1) > 0) hmax1 = h;
  if (kappa != hmax1 + 1)
    throw InvariantViolation("kappa != hmax(lambda=1)+1 at " + to_string(rd.type) +
                             " node " + std::to_string(node));

  // Lambda from the right drops of the full profile.
  std::map<std::pair<Rat, int>, int> acc; // (s, lambda) -> multiplicity
  for (int lambda = 1; lambda <= d0; ++lambda)
    for (int h = 1; h <= hmax; ++h) {
      int e = pd.full.at(h, lambda) - pd.full.at(h + 1, lambda);
      if (e <= 0) continue;
      Rat s = drop_s(h, lambda, kappa);
      if (s < Rat(0))
        throw InvariantViolation("negative s in Lambda at " + to_string(rd.type) +
                                 " node " + std::to_string(node));
      acc[{s, lambda}] += e;
    }
  for (const auto& [key, mult] : acc)
    pd.lambda.push_back({key.first, key.second, mult});
  std::sort(pd.lambda.begin(), pd.lambda.end(),
            [](const LambdaEntry& x, const LambdaEntry& y) {
              Rat rx = x.s / x.lambda, ry = y.s / y.lambda;
              if (rx != ry) return rx < ry;
              if (x.lambda != y.lambda) return x.lambda < y.lambda;
              return x.s < y.s;
            });

  // The top of the good ordering: a unique (lambda=1, s=s_k) entry of
  // multiplicity 1; all other entries have s/lambda strictly below s_k.
  int top_count = 0;
  for (const LambdaEntry& e : pd.lambda) {
    if (e.lambda == 1 && e.s == pd.s_k) {
      top_count += e.multiplicity;
    } else if (e.s / e.lambda >= pd.s_k) {
      throw InvariantViolation("non-final entry reaches s_k ratio at " +
                               to_string(rd.type) + " node " + std::to_string(node));
    }
  }
  if (top_count != 1)
    throw InvariantViolation("top Lambda entry not unique at " + to_string(rd.type) +
                             " node " + std::to_string(node));

  // Level-1 union bounds: 0 >= r > -(s_k+1), with r = 0 attained once.
  Rat bound = pd.s_k + 1;
  int zeros = 0;
  for (const LambdaEntry& e : pd.lambda) {
    Rat r = (e.s + 1) / e.lambda - bound;
    if (r > Rat(0) || r <= -bound)
      throw InvariantViolation("level-set entry outside (-(s_k+1), 0] at " +
                               to_string(rd.type) + " node " + std::to_string(node));
    if (r == Rat(0)) zeros += e.multiplicity;
  }
  if (zeros != 1)
    throw InvariantViolation("level-set zero multiplicity != 1 at " +
                             to_string(rd.type) + " node " + std::to_string(node));

  return pd;
}

std::vector<LevelSet> level_sets(const ParabolicDatum& pd) {
  std::vector<LevelSet> out;
  Rat skp1 = pd.s_k + 1;
  for (int d = 1; d <= pd.d0; ++d) {
    LevelSet ls;
    ls.d = d;
    for (const LambdaEntry& e : pd.lambda)
      if (e.lambda == d)
        for (int i = 0; i < e.multiplicity; ++i)
          ls.entries.push_back((e.s + 1) / d - skp1);
    std::sort(ls.entries.begin(), ls.entries.end(), std::greater<Rat>());
    out.push_back(std::move(ls));
  }
  return out;
}

LevelSet level_set_union(const ParabolicDatum& pd, int d) {
  LevelSet ls;
  ls.d = d;
  Rat skp1 = pd.s_k + 1;
  for (const LambdaEntry& e : pd.lambda)
    if (e.lambda % d == 0)
      for (int i = 0; i < e.multiplicity; ++i)
        ls.entries.push_back((e.s + 1) / e.lambda - skp1);
  std::sort(ls.entries.begin(), ls.entries.end(), std::greater<Rat>());
  return ls;
}

LFactorProduct intertwining_normalizer(const ParabolicDatum& pd) {
  std::vector<std::pair<LKey, int>> f;
  for (const LambdaEntry& e : pd.lambda)
    f.push_back({{e.lambda, e.s + 1}, e.multiplicity});
  return make_product(std::move(f));
}

LFactorProduct opposite_normalizer(const ParabolicDatum& pd) {
  std::vector<std::pair<LKey, int>> f;
  for (const LambdaEntry& e : pd.lambda)
    f.push_back({{e.lambda, -e.s}, e.multiplicity});
  return make_product(std::move(f));
}

LFactorProduct right_drop_product(const ParabolicDatum& pd, const Profile& p) {
  std::vector<std::pair<LKey, int>> f;
  for (int lambda = 1; lambda <= p.d0; ++lambda)
    for (int h = 1; h <= p.hmax; ++h) {
      int e = p.at(h, lambda) - p.at(h + 1, lambda);
      if (e > 0) f.push_back({{lambda, Rat(lambda * pd.kappa - 2 * h, 2)}, e});
    }
  return make_product(std::move(f));
}

LFactorProduct common_denominator(const ParabolicDatum& pd) {
  std::vector<std::pair<LKey, int>> f;
  for (int lambda = 1; lambda <= pd.d0; ++lambda)
    for (int h = 1; h <= pd.full.hmax; ++h) {
      int e = pd.full.at(h, lambda) - pd.full.at(h - 1, lambda);
      if (e > 0)
        f.push_back({{lambda, Rat(lambda * pd.kappa - 2 * h + 2, 2)}, e});
    }
  return make_product(std::move(f));
}

LFactorProduct cw_product(const ParabolicDatum& pd, const Profile& p) {
  // Definitional form: one L(lambda s + lambda(s_k+1) - h) over
  // L(lambda s + lambda(s_k+1) - h + 1) per inversion coroot; make_product
  // performs the telescoping.
  std::vector<std::pair<LKey, int>> f;
  for (int lambda = 1; lambda <= p.d0; ++lambda)
    for (int h = 1; h <= p.hmax; ++h) {
      int m = p.at(h, lambda);
      if (m == 0) continue;
      f.push_back({{lambda, Rat(lambda * pd.kappa - 2 * h, 2)}, m});
      f.push_back({{lambda, Rat(lambda * pd.kappa - 2 * h + 2, 2)}, -m});
    }
  return make_product(std::move(f));
}

} // namespace parpole
