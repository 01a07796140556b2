#include <parpole/words.hpp>

#include <algorithm>
#include <bitset>
#include <chrono>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace parpole {

std::string to_string(const ReducedWord& w) {
  std::string out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += std::to_string(*it + 1);
  }
  return out;
}

CorootSequenceResult coroot_sequence(const ReducedWord& w, const RootDatum& rd) {
  const CartanMatrix& a = rd.a;
  const int n = rd.type.rank;
  CorootSequenceResult res;
  std::unordered_set<std::uint64_t> seen;
  for (int p = 0; p < w.length(); ++p) {
    int lp = w.letters[p];
    if (lp < 0 || lp >= n) throw std::invalid_argument("letter out of range");
    Coord v(n, 0);
    v[lp] = 1;
    for (int q = p - 1; q >= 0; --q) v = reflect_coroot(a, w.letters[q], v);
    bool neg = std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
    if (!neg && !seen.insert(pack_coord(v)).second) neg = true; // repeat
    if (neg && res.reduced) {
      res.reduced = false;
      res.failure_pos = p;
    }
    res.coroots.push_back(std::move(v));
  }
  return res;
}

namespace {

// Internal label for a coroot slot of the canonical word. The `upper` family
// is the leading staircase block shared by all classical types; `odd` and
// `even` are the two interleaved families of the tail blocks (the names refer
// to the parity of the pass that emits them).
enum class Fam { upper, odd, even };

struct Label {
  Fam fam = Fam::upper;
  int r = 0, t = 0, m = 0;
};

std::string to_string(const Label& lb) {
  std::ostringstream os;
  switch (lb.fam) {
    case Fam::upper: os << "(A," << lb.r << "," << lb.t << ")"; break;
    case Fam::odd: os << "(2," << lb.r << "," << lb.t << ")"; break;
    case Fam::even: os << "(1," << lb.m << "," << lb.r << ")"; break;
  }
  return os.str();
}

using LabeledTable = std::vector<std::pair<Label, Coord>>;

// seg adds mult * (e_lo + ... + e_hi), empty when lo > hi; 1-based indices
void seg(Coord& c, int lo, int hi, int mult) {
  for (int j = lo; j <= hi; ++j) c[j - 1] += mult;
}

LabeledTable labeled_table(CartanType t, int node) {
  const int n = t.rank, l = node;
  LabeledTable out;
  auto push = [&](Fam f, int r, int tt, int m, const Coord& c) {
    out.push_back({Label{f, r, tt, m}, c});
  };
  auto upper_rows = [&](int rmax) {
    for (int r = l; r <= rmax; ++r)
      for (int tt = l; tt >= 1; --tt) {
        Coord c(n, 0);
        seg(c, tt, r, 1);
        push(Fam::upper, r, tt, 0, c);
      }
  };

  switch (t.series) {
    case Series::A:
      upper_rows(n);
      break;
    case Series::B:
      if (l < n) upper_rows(n - 1);
      for (int i = 1; i <= (l < n ? l : n); ++i) {
        int r = (l < n ? l : n) - i + 1;
        for (int tt = r; tt >= 1; --tt) {
          Coord c(n, 0);
          c[n - 1] = 1;
          seg(c, r, n - 1, 2);
          seg(c, tt, r - 1, 1);
          push(Fam::odd, r, tt, 0, c);
        }
        if (l < n)
          for (int m = n; m >= l + 1; --m) {
            Coord c(n, 0);
            c[n - 1] = 1;
            seg(c, m, n - 1, 2);
            seg(c, r, m - 1, 1);
            push(Fam::even, r, 0, m, c);
          }
      }
      break;
    case Series::C:
      if (l < n) upper_rows(n - 1);
      for (int i = 1; i <= l; ++i) {
        int r = l - i + 1;
        {
          Coord c(n, 0);
          seg(c, r, n, 1);
          push(Fam::odd, r, r, 0, c);
        }
        for (int tt = r - 1; tt >= 1; --tt) {
          Coord c(n, 0);
          seg(c, r, n, 2);
          seg(c, tt, r - 1, 1);
          push(Fam::odd, r, tt, 0, c);
        }
        if (l < n)
          for (int m = n; m >= l + 1; --m) {
            Coord c(n, 0);
            seg(c, m, n, 2);
            seg(c, r, m - 1, 1);
            push(Fam::even, r, 0, m, c);
          }
      }
      break;
    case Series::D:
      if (l <= n - 2) {
        upper_rows(n - 1);
        for (int i = 1; i <= l; ++i) {
          int r = l - i + 1;
          for (int tt = r - 1; tt >= 1; --tt) {
            Coord c(n, 0);
            c[n - 1] = 1;
            c[n - 2] += 1;
            seg(c, r, n - 2, 2);
            seg(c, tt, r - 1, 1);
            push(Fam::odd, r, tt, 0, c);
          }
          for (int m = n; m >= l + 1; --m) {
            Coord c(n, 0);
            seg(c, m, n, 1);
            seg(c, r, n - 2, 1);
            push(Fam::even, r, 0, m, c);
          }
        }
      } else {
        // spin nodes: table for node n, coordinate swap handles node n-1
        for (int tt = n - 1; tt >= 1; --tt) {
          Coord c(n, 0);
          c[n - 1] = 1;
          seg(c, tt, n - 2, 1);
          push(Fam::odd, 1, tt, 0, c);
        }
        for (int i = 2; i <= n - 1; ++i) {
          int r = n - i + 1;
          for (int tt = r - 1; tt >= 1; --tt) {
            Coord c(n, 0);
            c[n - 1] = 1;
            c[n - 2] += 1;
            seg(c, r, n - 2, 2);
            seg(c, tt, r - 1, 1);
            push(Fam::odd, i, tt, 0, c);
          }
        }
        if (l == n - 1)
          for (auto& [lb, c] : out) std::swap(c[n - 2], c[n - 1]);
      }
      break;
    case Series::G:
      if (node == 1)
        for (auto [x, y] : {std::pair{1, 0}, {1, 1}, {2, 3}, {1, 2}, {1, 3}})
          push(Fam::odd, 0, 0, 0, Coord{x, y});
      else
        for (auto [x, y] : {std::pair{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}})
          push(Fam::odd, 0, 0, 0, Coord{x, y});
      break;
    default:
      break; // E, F: no closed table
  }
  return out;
}

// Greedy minimal-letter ascent through the quotient: repeatedly applies the
// smallest simple reflection that adds an inversion outside the Levi. Loud
// failure if it stalls before exhausting the outside coroots.
ReducedWord greedy_word(const RootDatum& rd, int node) {
  const int n = rd.type.rank;
  std::vector<std::int8_t> mat(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) mat[static_cast<std::size_t>(i) * n + i] = 1;

  std::size_t outside = 0;
  for (const Coord& cv : rd.pos_coroots)
    if (cv[node - 1] >= 1) ++outside;

  ReducedWord w;
  w.canonical = false;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
      const std::int8_t* col = mat.data() + static_cast<std::size_t>(i) * n;
      bool ok = col[node - 1] >= 1;
      for (int r = 0; ok && r < n; ++r) ok = col[r] >= 0;
      if (ok) pick = i;
    }
    if (pick < 0) break;
    w.letters.push_back(pick);
    std::int8_t coli[kMaxRank];
    const std::int8_t* src = mat.data() + static_cast<std::size_t>(pick) * n;
    std::copy(src, src + n, coli);
    for (int c = 0; c < n; ++c) {
      int aci = rd.a[c][pick];
      if (aci == 0) continue;
      std::int8_t* cc = mat.data() + static_cast<std::size_t>(c) * n;
      for (int r = 0; r < n; ++r)
        cc[r] = static_cast<std::int8_t>(cc[r] - aci * coli[r]);
    }
  }
  if (w.letters.size() != outside)
    throw InvariantViolation("greedy word stalled before the longest element");
  return w;
}

} // namespace

ReducedWord canonical_w0_word(const RootDatum& rd, int node) {
  const int n = rd.type.rank, l = node;
  if (node < 1 || node > n) throw std::invalid_argument("node out of range");
  ReducedWord w;
  auto emit = [&](int one_based) { w.letters.push_back(one_based - 1); };
  auto emit_desc = [&](int hi, int lo) {
    for (int t = hi; t >= lo; --t) emit(t);
  };

  switch (rd.type.series) {
    case Series::A:
      for (int r = l; r <= n; ++r) emit_desc(r, r - l + 1);
      break;
    case Series::B:
    case Series::C:
      if (l < n) {
        for (int r = l; r <= n - 1; ++r) emit_desc(r, r - l + 1);
        for (int i = 1; i <= l; ++i) {
          emit_desc(n, n - l + i);
          emit_desc(n - l + i - 1, i);
        }
      } else {
        for (int i = 1; i <= n; ++i) emit_desc(n, i);
      }
      break;
    case Series::D: {
      auto x_letter = [&](int i) { return (i % 2 == 1) ? n : n - 1; };
      if (l <= n - 2) {
        for (int r = l; r <= n - 1; ++r) emit_desc(r, r - l + 1);
        for (int i = 1; i <= l - 1; ++i) {
          emit(x_letter(i));
          emit_desc(n - 2, n - l + i);
          emit_desc(n - l + i - 1, i);
        }
        emit(x_letter(l));
        emit_desc(n - 2, l);
      } else {
        for (int i = 1; i <= n - 1; ++i) {
          emit(x_letter(i));
          emit_desc(n - 2, i);
        }
        if (l == n - 1)
          for (int& x : w.letters) {
            if (x == n - 1) x = n - 2;
            else if (x == n - 2) x = n - 1;
          }
      }
      break;
    }
    case Series::G:
      w.letters = (node == 1) ? std::vector<int>{0, 1, 0, 1, 0}
                              : std::vector<int>{1, 0, 1, 0, 1};
      break;
    case Series::E:
    case Series::F:
      return greedy_word(rd, node);
  }
  return w;
}

namespace {

int window_size(BraidRelation rel) {
  switch (rel) {
    case BraidRelation::a: return 2;
    case BraidRelation::b: return 3;
    case BraidRelation::c: return 4;
    case BraidRelation::d: return 6;
  }
  return 0;
}

int required_bond(BraidRelation rel) {
  switch (rel) {
    case BraidRelation::a: return 0;
    case BraidRelation::b: return 1;
    case BraidRelation::c: return 2;
    case BraidRelation::d: return 3;
  }
  return -1;
}

bool window_matches(const std::vector<int>& letters, const CartanMatrix& a,
                    int pos, BraidRelation rel) {
  int k = window_size(rel);
  if (pos < 0 || pos + k > static_cast<int>(letters.size())) return false;
  int x = letters[pos], y = letters[pos + 1];
  if (x == y) return false;
  for (int j = 2; j < k; ++j)
    if (letters[pos + j] != ((j % 2 == 0) ? x : y)) return false;
  return a[x][y] * a[y][x] == required_bond(rel);
}

} // namespace

ReducedWord braid_move(const ReducedWord& w, int pos, BraidRelation rel,
                       const RootDatum& rd) {
  if (!window_matches(w.letters, rd.a, pos, rel))
    throw std::invalid_argument("braid pattern does not match at position " +
                                std::to_string(pos));
  int k = window_size(rel);
  ReducedWord out;
  out.canonical = false;
  out.letters = w.letters;
  // The move rewrites the alternating window to start with the other letter.
  // For even windows that equals reversing the letters; for the length-3 move
  // the letter window is a palindrome, so reversal would be a no-op while the
  // word x y x -> y x y still changes.
  int x = w.letters[pos], y = w.letters[pos + 1];
  for (int j = 0; j < k; ++j)
    out.letters[pos + j] = (j % 2 == 0) ? y : x;

  CorootSequenceResult before = coroot_sequence(w, rd);
  CorootSequenceResult after = coroot_sequence(out, rd);
  if (!before.reduced || !after.reduced)
    throw InvariantViolation("braid move applied to a non-reduced word");
  std::vector<Coord> expect = before.coroots;
  std::reverse(expect.begin() + pos, expect.begin() + pos + k);
  if (after.coroots != expect)
    throw InvariantViolation("braid move did not reverse the coroot window");
  if (rel == BraidRelation::b) {
    Coord sum(rd.type.rank, 0);
    for (int r = 0; r < rd.type.rank; ++r)
      sum[r] = before.coroots[pos][r] + before.coroots[pos + 2][r];
    if (before.coroots[pos + 1] != sum)
      throw InvariantViolation("length-3 braid middle coroot is not the sum");
  }
  return out;
}

std::vector<std::pair<int, BraidRelation>> braid_moves(const ReducedWord& w,
                                                       const CartanMatrix& a) {
  std::vector<std::pair<int, BraidRelation>> out;
  for (BraidRelation rel : {BraidRelation::a, BraidRelation::b,
                            BraidRelation::c, BraidRelation::d})
    for (int pos = 0; pos + window_size(rel) <= w.length(); ++pos)
      if (window_matches(w.letters, a, pos, rel)) out.push_back({pos, rel});
  return out;
}

std::vector<Coord> expected_coroot_table(CartanType t, int node) {
  if (t.series == Series::G) {
    LabeledTable lt = labeled_table(t, node);
    std::vector<Coord> out;
    for (auto& [lb, c] : lt) out.push_back(c);
    return out;
  }
  if (t.rank < 2 || t.rank > 4) return {};
  if (t.series != Series::A && t.series != Series::B && t.series != Series::C &&
      t.series != Series::D)
    return {};
  LabeledTable lt = labeled_table(t, node);
  std::vector<Coord> out;
  for (auto& [lb, c] : lt) out.push_back(c);
  return out;
}

namespace {

constexpr int kMaxLabels = 256;
using PairBits = std::bitset<kMaxLabels>;

// Order-reversibility allowances, one per classical family pairing. Pairs of
// labels are unordered; each rule first normalizes its own way. A pair the
// rule declares non-reversible must keep its order in every reduced word;
// an allowed pair need not be realized, since the three-letter move that
// would swap it acts on a contiguous sum triple that boundary indices can
// make unassemblable (C_3 node 2 already pins (A,2,1) under (2,2,1)).
bool rule_upper_upper(const Label& p, const Label& q) {
  const Label& lo = (p.r <= q.r) ? p : q;
  const Label& hi = (p.r <= q.r) ? q : p;
  return lo.r < hi.r && hi.t > lo.t;
}

bool rule_odd_odd(const Label& p, const Label& q) {
  const Label& big = (p.r >= q.r) ? p : q;
  const Label& sml = (p.r >= q.r) ? q : p;
  return big.r > sml.r && sml.t > big.t;
}

bool rule_even_even(const Label& p, const Label& q) {
  const Label& big = (p.r >= q.r) ? p : q;
  const Label& sml = (p.r >= q.r) ? q : p;
  return big.r > sml.r && sml.m > big.m;
}

bool predicted_reversible(Series series, int n, const Label& p, const Label& q) {
  auto fam_pair = [&](Fam f1, Fam f2, const Label*& a, const Label*& b) {
    if (p.fam == f1 && q.fam == f2) { a = &p; b = &q; return true; }
    if (q.fam == f1 && p.fam == f2) { a = &q; b = &p; return true; }
    return false;
  };
  const Label *a = nullptr, *b = nullptr;
  if (p.fam == Fam::upper && q.fam == Fam::upper) return rule_upper_upper(p, q);
  if (p.fam == Fam::odd && q.fam == Fam::odd) return rule_odd_odd(p, q);
  if (p.fam == Fam::even && q.fam == Fam::even) return rule_even_even(p, q);
  if (fam_pair(Fam::odd, Fam::upper, a, b)) {
    bool base = b->t < a->r;
    if (series == Series::D)
      return base || (a->t + 1 == a->r && a->r == b->t && b->r == n - 1);
    return base;
  }
  if (fam_pair(Fam::even, Fam::upper, a, b)) {
    bool base = b->t < a->r;
    if (series == Series::D)
      return base ||
             (a->m == n && b->r == n - 1 && (b->t == a->r || b->t == a->r + 1));
    return base;
  }
  if (fam_pair(Fam::odd, Fam::even, a, b)) {
    bool base = a->t < b->r;
    if (series == Series::D)
      return base || (b->r == a->t && a->t == a->r - 1 && b->m == n);
    return base;
  }
  return false;
}

} // namespace

CheckReport certify_swap_rules(const RootDatum& rd, int node,
                               const CertifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.check = "swap-rules";
  rep.type = rd.type;
  rep.node = node;
  auto done = [&](CheckReport& r) -> CheckReport& {
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    return r;
  };
  auto skip = [&](const std::string& why) {
    rep.status = CheckStatus::skipped;
    rep.reason = why;
    return done(rep);
  };

  const int n = rd.type.rank;
  switch (rd.type.series) {
    case Series::A: break;
    case Series::B:
    case Series::C:
      if (node >= n) return skip("swap rules cover nodes below the rank only");
      break;
    case Series::D:
      if (node > n - 2) return skip("swap rules do not cover the spin nodes");
      break;
    default:
      return skip("no labeled swap rules for this type");
  }

  LabeledTable table = labeled_table(rd.type, node);
  const int L = static_cast<int>(table.size());
  if (L > kMaxLabels) return skip("quotient too long to certify");

  ReducedWord w0 = canonical_w0_word(rd, node);
  CorootSequenceResult seq0 = coroot_sequence(w0, rd);
  if (w0.length() != L || !seq0.reduced)
    throw InvariantViolation("canonical word disagrees with its table length");

  auto coord_json = [](const Coord& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + "]";
  };
  std::unordered_map<std::uint64_t, int> label_of;
  for (int k = 0; k < L; ++k) {
    if (seq0.coroots[k] != table[k].second) {
      rep.status = CheckStatus::failed;
      std::ostringstream os;
      os << "{\"position\":" << k << ",\"label\":\"" << to_string(table[k].first)
         << "\",\"expected\":" << coord_json(table[k].second)
         << ",\"got\":" << coord_json(seq0.coroots[k]) << "}";
      rep.counterexample = os.str();
      return done(rep);
    }
    label_of.emplace(pack_coord(table[k].second), k);
  }

  std::vector<PairBits> high_mask(L);
  for (int a = 0; a < L; ++a)
    for (int b = a + 1; b < L; ++b) high_mask[a].set(b);
  std::vector<PairBits> observed(L);

  struct Node {
    std::string key;                  // letters as bytes
    std::vector<std::uint8_t> labels; // canonical index per position
  };
  auto key_of = [](const std::vector<int>& letters) {
    std::string k;
    k.reserve(letters.size());
    for (int x : letters) k.push_back(static_cast<char>(x));
    return k;
  };

  std::unordered_set<std::string> visited;
  std::deque<Node> queue;
  {
    Node start;
    start.key = key_of(w0.letters);
    start.labels.resize(L);
    for (int k = 0; k < L; ++k) start.labels[k] = static_cast<std::uint8_t>(k);
    visited.insert(start.key);
    queue.push_back(std::move(start));
  }

  std::uint64_t pops = 0;
  while (!queue.empty()) {
    if (visited.size() > opt.node_cap)
      return skip("braid graph exceeds the node cap");
    Node cur = std::move(queue.front());
    queue.pop_front();
    ++pops;

    PairBits seen;
    for (int q = 0; q < L; ++q) {
      int lab = cur.labels[q];
      observed[lab] |= seen & high_mask[lab];
      seen.set(lab);
    }

    std::vector<int> letters(cur.key.begin(), cur.key.end());
    if ((pops & 0xfff) == 0) {
      // spot audit: window bookkeeping must agree with a full recomputation
      ReducedWord wcheck;
      wcheck.letters = letters;
      CorootSequenceResult sc = coroot_sequence(wcheck, rd);
      if (!sc.reduced) throw InvariantViolation("braid graph left reduced words");
      for (int k = 0; k < L; ++k)
        if (label_of.at(pack_coord(sc.coroots[k])) != cur.labels[k])
          throw InvariantViolation("label bookkeeping diverged");
    }

    for (BraidRelation rel : {BraidRelation::a, BraidRelation::b,
                              BraidRelation::c, BraidRelation::d}) {
      int k = window_size(rel);
      for (int pos = 0; pos + k <= L; ++pos) {
        if (!window_matches(letters, rd.a, pos, rel)) continue;
        Node child;
        child.key = cur.key;
        std::reverse(child.key.begin() + pos, child.key.begin() + pos + k);
        if (!visited.insert(child.key).second) continue;
        child.labels = cur.labels;
        std::reverse(child.labels.begin() + pos, child.labels.begin() + pos + k);
        queue.push_back(std::move(child));
      }
    }
  }

  std::uint64_t reversible = 0, unrealized = 0, violations = 0;
  std::string first_bad;
  for (int a = 0; a < L; ++a)
    for (int b = a + 1; b < L; ++b) {
      bool obs = observed[a].test(b);
      bool pred =
          predicted_reversible(rd.type.series, n, table[a].first, table[b].first);
      if (obs) ++reversible;
      if (obs && !pred) {
        ++violations;
        if (first_bad.empty()) {
          std::ostringstream os;
          os << "{\"first\":\"" << to_string(table[a].first) << "\",\"second\":\""
             << to_string(table[b].first) << "\",\"positions\":[" << a << ","
             << b << "]}";
          first_bad = os.str();
        }
      } else if (!obs && pred) {
        ++unrealized;
      }
    }

  rep.info["words"] = std::to_string(visited.size());
  rep.info["pairs"] = std::to_string(static_cast<std::uint64_t>(L) * (L - 1) / 2);
  rep.info["reversible_pairs"] = std::to_string(reversible);
  rep.info["unrealized_swaps"] = std::to_string(unrealized);
  if (violations) {
    rep.status = CheckStatus::failed;
    rep.counterexample = first_bad;
  } else {
    rep.status = CheckStatus::verified;
  }
  return done(rep);
}

} // namespace parpole
