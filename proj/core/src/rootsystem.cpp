#include <parpole/rootsystem.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace parpole {

int height(const Coord& c) {
  return std::accumulate(c.begin(), c.end(), 0);
}

Coord reflect_root(const CartanMatrix& a, int i, const Coord& beta) {
  int pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing += beta[j] * a[i][j];
  Coord out = beta;
  out[i] -= pairing;
  return out;
}

Coord reflect_coroot(const CartanMatrix& a, int i, const Coord& v) {
  int pairing = 0;
  for (std::size_t j = 0; j < v.size(); ++j) pairing += v[j] * a[j][i];
  Coord out = v;
  out[i] -= pairing;
  return out;
}

std::uint64_t pack_coord(const Coord& c) {
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < c.size(); ++j)
    key |= static_cast<std::uint64_t>(c[j] & 0xF) << (4 * j);
  return key;
}

int RootDatum::root_index(const Coord& root) const {
  auto it = root_lookup.find(pack_coord(root));
  return it == root_lookup.end() ? -1 : it->second;
}

int RootDatum::coroot_index(const Coord& coroot) const {
  auto it = coroot_lookup.find(pack_coord(coroot));
  return it == coroot_lookup.end() ? -1 : it->second;
}

const Coord& RootDatum::highest_root() const { return pos_roots.back(); }
const Coord& RootDatum::highest_coroot() const {
  // sorted by root height, so the dual height maximum needs a scan
  const Coord* best = &pos_coroots.front();
  int best_h = height(*best);
  for (const Coord& v : pos_coroots) {
    int h = height(v);
    if (h > best_h) {
      best = &v;
      best_h = h;
    }
  }
  return *best;
}

RootDatum build_root_datum(CartanType t) {
  if (!is_valid(t)) throw std::invalid_argument("bad type: " + to_string(t));
  RootDatum rd;
  rd.type = t;
  rd.a = cartan_matrix(t);
  int n = t.rank;

  // Paired closure: reflecting a (root, coroot) pair componentwise keeps the
  // bijection beta <-> beta^vee, since (s_i beta)^vee = s_i(beta^vee).
  struct Pair {
    Coord root, coroot;
  };
  std::vector<Pair> found;
  std::unordered_map<std::uint64_t, int> seen;
  std::queue<int> work;
  for (int i = 0; i < n; ++i) {
    Coord e(n, 0);
    e[i] = 1;
    seen.emplace(pack_coord(e), static_cast<int>(found.size()));
    found.push_back({e, e});
    work.push(static_cast<int>(found.size()) - 1);
  }
  while (!work.empty()) {
    int idx = work.front();
    work.pop();
    for (int i = 0; i < n; ++i) {
      Coord r = reflect_root(rd.a, i, found[idx].root);
      bool positive = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
      if (!positive) continue;
      std::uint64_t key = pack_coord(r);
      if (seen.contains(key)) continue;
      Coord v = reflect_coroot(rd.a, i, found[idx].coroot);
      seen.emplace(key, static_cast<int>(found.size()));
      found.push_back({std::move(r), std::move(v)});
      work.push(static_cast<int>(found.size()) - 1);
    }
  }

  std::sort(found.begin(), found.end(), [](const Pair& x, const Pair& y) {
    int hx = height(x.root), hy = height(y.root);
    if (hx != hy) return hx < hy;
    return x.root < y.root;
  });

  rd.pos_roots.reserve(found.size());
  rd.pos_coroots.reserve(found.size());
  for (auto& p : found) {
    rd.pos_roots.push_back(std::move(p.root));
    rd.pos_coroots.push_back(std::move(p.coroot));
  }
  for (int k = 0; k < static_cast<int>(rd.pos_roots.size()); ++k) {
    rd.root_lookup.emplace(pack_coord(rd.pos_roots[k]), k);
    rd.coroot_lookup.emplace(pack_coord(rd.pos_coroots[k]), k);
  }
  return rd;
}

} // namespace parpole
