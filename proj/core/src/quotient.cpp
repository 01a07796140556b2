#include <parpole/quotient.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace parpole {

int InvBits::count() const {
  return std::popcount(lo) + std::popcount(hi);
}

std::size_t InvBitsHash::operator()(const InvBits& b) const noexcept {
  auto mix = [](std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  };
  return mix(b.lo ^ 0x9e3779b97f4a7c15ULL) ^ (mix(b.hi) << 1);
}

Profile profile_of(const ParabolicDatum& pd, const InvBits& inv) {
  Profile p;
  p.hmax = pd.full.hmax;
  p.d0 = pd.full.d0;
  p.m.assign(pd.full.m.size(), 0);
  auto scan = [&](std::uint64_t word, int base) {
    while (word) {
      int i = base + std::countr_zero(word);
      word &= word - 1;
      const CorootLine& line = pd.outside[i];
      p.add(line.h, line.lambda, 1);
    }
  };
  scan(inv.lo, 0);
  scan(inv.hi, 64);
  return p;
}

std::uint64_t expected_quotient_size(const ParabolicDatum& pd) {
  return weyl_order(pd.rd.type) / levi_weyl_order(pd.rd.type, pd.node);
}

EnumResult enumerate_quotient(const ParabolicDatum& pd, const EnumCallbacks& cb,
                              std::optional<Deadline> deadline) {
  const int n = pd.rd.type.rank;
  const int ell = pd.node - 1;
  const int outside_n = static_cast<int>(pd.outside.size());
  if (outside_n > 128)
    throw std::invalid_argument("quotient too wide: more than 128 outside coroots");

  // ambient coroot index -> outside slot
  std::vector<int> slot(pd.rd.pos_coroots.size(), -1);
  for (int i = 0; i < outside_n; ++i) slot[pd.outside[i].index] = i;

  // Inverse-action matrices, column-major int8: column i of M_w holds
  // w^{-1}(alpha_i^vee). Update under w -> s_i w is col_c -= A[c][i]*col_i.
  const std::size_t msz = static_cast<std::size_t>(n) * n;
  std::vector<InvBits> layer_inv{InvBits{}};
  std::vector<std::int8_t> layer_mat(msz, 0);
  for (int i = 0; i < n; ++i) layer_mat[static_cast<std::size_t>(i) * n + i] = 1;

  EnumResult res;
  res.stats.by_length.assign(1, 0);

  Coord gamma(n);
  int length = 0;
  while (!layer_inv.empty()) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      res.completed = false;
      return res;
    }

    const std::size_t cnt = layer_inv.size();
    res.stats.reps += cnt;
    if (static_cast<int>(res.stats.by_length.size()) <= length)
      res.stats.by_length.resize(length + 1, 0);
    res.stats.by_length[length] = cnt;
    res.stats.max_length = length;

    // canonical within-layer order
    std::vector<std::uint32_t> order(cnt);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
      return layer_inv[x] < layer_inv[y];
    });

    std::vector<InvBits> next_inv;
    std::vector<std::int8_t> next_mat;
    std::unordered_map<InvBits, std::uint32_t, InvBitsHash> next_seen;

    for (std::uint32_t oi : order) {
      const InvBits inv = layer_inv[oi];
      const std::int8_t* M = layer_mat.data() + oi * msz;
      CosetRep rep{inv, length};
      Profile prof;
      if (cb.on_rep || cb.on_edge) prof = profile_of(pd, inv);
      if (cb.on_rep) cb.on_rep(rep, prof);

      for (int i = 0; i < n; ++i) {
        const std::int8_t* col = M + static_cast<std::size_t>(i) * n;
        bool positive = true;
        for (int r = 0; r < n; ++r) {
          gamma[r] = col[r];
          if (col[r] < 0) positive = false;
        }
        if (!positive || gamma[ell] < 1) continue;

        int ambient = pd.rd.coroot_index(gamma);
        int j = ambient >= 0 ? slot[ambient] : -1;
        if (j < 0)
          throw std::logic_error("ascent produced an unknown coroot");

        ++res.stats.edges;
        if (cb.on_edge) cb.on_edge(CoveringEdge{rep, prof, i, j});

        InvBits child = inv;
        child.set(j);
        if (next_seen.contains(child)) continue;
        next_seen.emplace(child, static_cast<std::uint32_t>(next_inv.size()));
        next_inv.push_back(child);
        std::size_t base = next_mat.size();
        next_mat.resize(base + msz);
        std::int8_t* C = next_mat.data() + base;
        std::copy(M, M + msz, C);
        // snapshot of column i: the c == i update would otherwise corrupt it
        std::int8_t coli[kMaxRank];
        std::copy(C + static_cast<std::size_t>(i) * n,
                  C + static_cast<std::size_t>(i) * n + n, coli);
        for (int c = 0; c < n; ++c) {
          int aci = pd.rd.a[c][i];
          if (aci == 0) continue;
          std::int8_t* cc = C + static_cast<std::size_t>(c) * n;
          for (int r = 0; r < n; ++r)
            cc[r] = static_cast<std::int8_t>(cc[r] - aci * coli[r]);
        }
      }
    }

    layer_inv = std::move(next_inv);
    layer_mat = std::move(next_mat);
    ++length;
  }
  return res;
}

QuotientStats quotient_stats(const ParabolicDatum& pd) {
  return enumerate_quotient(pd, {}).stats;
}

} // namespace parpole
