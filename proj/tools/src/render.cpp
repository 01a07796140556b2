#include <parpole_cli/render.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace parpole::cli {

std::vector<Target> default_scope() {
  std::vector<Target> out;
  auto add = [&](Series s, int rank) {
    CartanType t{s, rank};
    for (int node = 1; node <= rank; ++node) out.push_back({t, node});
  };
  for (int n = 1; n <= 6; ++n) add(Series::A, n);
  for (int n = 2; n <= 6; ++n) add(Series::B, n);
  for (int n = 2; n <= 6; ++n) add(Series::C, n);
  for (int n = 4; n <= 6; ++n) add(Series::D, n);
  add(Series::G, 2);
  add(Series::F, 4);
  add(Series::E, 6);
  add(Series::E, 7);
  return out;
}

std::vector<Target> resolve_targets(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return default_scope();
  std::vector<Target> out;
  for (const std::string& tok : tokens) {
    std::string head = tok;
    int node = 0;
    if (auto colon = tok.find(':'); colon != std::string::npos) {
      head = tok.substr(0, colon);
      std::string tail = tok.substr(colon + 1);
      try {
        std::size_t used = 0;
        node = std::stoi(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(tail);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad node in target: " + tok);
      }
    }
    CartanType t = type_from_string(head);
    if (node < 0 || node > t.rank)
      throw std::invalid_argument("node out of range in target: " + tok);
    if (node == 0)
      for (int l = 1; l <= t.rank; ++l) out.push_back({t, l});
    else
      out.push_back({t, node});
  }
  return out;
}

Json rat_json(const Rat& r) { return to_string(r); }

Json product_json(const LFactorProduct& p) {
  Json arr = Json::array();
  for (const auto& [key, exp] : p.factors) {
    Json f;
    f["lambda"] = key.lambda;
    f["c"] = rat_json(key.c);
    f["exp"] = exp;
    arr.push_back(std::move(f));
  }
  return arr;
}

Json tables_json(const ParabolicDatum& pd) {
  Json j;
  j["type"] = to_string(pd.rd.type);
  j["node"] = pd.node;
  j["kappa"] = pd.kappa;
  j["s_k"] = rat_json(pd.s_k);
  j["d0"] = pd.d0;
  Json lam = Json::array();
  for (const LambdaEntry& e : pd.lambda) {
    Json le;
    le["s"] = rat_json(e.s);
    le["lambda"] = e.lambda;
    le["mult"] = e.multiplicity;
    lam.push_back(std::move(le));
  }
  j["lambda"] = std::move(lam);
  Json levels;
  for (const LevelSet& ls : level_sets(pd)) {
    Json arr = Json::array();
    for (const Rat& r : ls.entries) arr.push_back(rat_json(r));
    levels[std::to_string(ls.d)] = std::move(arr);
  }
  j["levels"] = std::move(levels);
  j["a_PP"] = product_json(intertwining_normalizer(pd));
  j["a_PPop"] = product_json(opposite_normalizer(pd));
  j["d"] = product_json(common_denominator(pd));
  return j;
}

namespace {

std::string join_rats(const std::vector<Rat>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s;
}

} // namespace

std::string tables_text(const ParabolicDatum& pd) {
  std::ostringstream os;
  os << to_string(pd.rd.type) << " node " << pd.node << "  s_k="
     << to_string(pd.s_k) << "  kappa=" << pd.kappa << "  d0=" << pd.d0 << "\n";
  os << "  Lambda:";
  for (const LambdaEntry& e : pd.lambda) {
    os << " (" << to_string(e.s) << "," << e.lambda << ")";
    if (e.multiplicity > 1) os << "x" << e.multiplicity;
  }
  os << "\n";
  for (const LevelSet& ls : level_sets(pd))
    os << "  L(" << ls.d << ") = {" << join_rats(ls.entries) << "}\n";
  os << "  a_PP   = " << to_string(intertwining_normalizer(pd)) << "\n";
  os << "  a_PPop = " << to_string(opposite_normalizer(pd)) << "\n";
  os << "  d      = " << to_string(common_denominator(pd)) << "\n";
  return os.str();
}

std::string tables_latex(CartanType t, const std::vector<ParabolicDatum>& rows) {
  int dmax = 1;
  for (const ParabolicDatum& pd : rows) dmax = std::max(dmax, pd.d0);
  std::ostringstream os;
  os << "% " << to_string(t) << "\n";
  os << "\\begin{tabular}{r|";
  for (int d = 1; d <= dmax; ++d) os << "l";
  os << "|l}\n$\\ell$";
  for (int d = 1; d <= dmax; ++d) os << " & $L^{(" << d << ")}$";
  os << " & $s_k$ \\\\\n\\hline\n";
  for (const ParabolicDatum& pd : rows) {
    os << pd.node;
    std::vector<LevelSet> ls = level_sets(pd);
    for (int d = 1; d <= dmax; ++d) {
      os << " & ";
      if (d <= pd.d0) os << "$" << join_rats(ls[d - 1].entries) << "$";
    }
    os << " & $" << to_string(pd.s_k) << "$ \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

Json check_json(const CheckReport& r, bool timings) {
  Json j;
  j["check"] = r.check;
  j["type"] = to_string(r.type);
  j["node"] = r.node;
  j["status"] = to_string(r.status);
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.counterexample.empty())
    j["counterexample"] = Json::parse(r.counterexample);
  j["millis"] = timings ? r.millis : 0;
  if (!r.info.empty()) {
    Json info;
    for (const auto& [k, v] : r.info) info[k] = v;
    j["info"] = std::move(info);
  }
  return j;
}

Json cells_json(const ParabolicDatum& pd, const std::vector<CellDiff>& cells) {
  Json j;
  j["type"] = to_string(pd.rd.type);
  j["node"] = pd.node;
  Json arr = Json::array();
  for (const CellDiff& c : cells) {
    Json cj;
    cj["column"] = c.column;
    cj["printed"] = c.printed;
    cj["derived"] = c.derived;
    switch (c.kind) {
      case CellKind::match: cj["kind"] = "match"; break;
      case CellKind::allowlisted: cj["kind"] = "allowlisted"; break;
      case CellKind::mismatch: cj["kind"] = "mismatch"; break;
    }
    if (!c.justification.empty()) cj["justification"] = c.justification;
    arr.push_back(std::move(cj));
  }
  j["cells"] = std::move(arr);
  return j;
}

Json quotient_json(const ParabolicDatum& pd, const QuotientStats& st,
                   bool completed) {
  Json j;
  j["type"] = to_string(pd.rd.type);
  j["node"] = pd.node;
  j["reps"] = st.reps;
  j["edges"] = st.edges;
  j["max_length"] = st.max_length;
  j["by_length"] = st.by_length;
  std::uint64_t expected = expected_quotient_size(pd);
  j["expected"] = expected;
  j["completed"] = completed;
  if (completed)
    j["match"] = (st.reps == expected);
  else
    j["match"] = nullptr;
  return j;
}

Json word_json(const ParabolicDatum& pd, const ReducedWord& w,
               const CorootSequenceResult& seq) {
  Json j;
  j["type"] = to_string(pd.rd.type);
  j["node"] = pd.node;
  j["length"] = w.length();
  j["canonical"] = w.canonical;
  j["word"] = to_string(w);
  Json letters = Json::array();
  for (int x : w.letters) letters.push_back(x + 1);
  j["letters"] = std::move(letters); // application order, 1-based
  j["reduced"] = seq.reduced;
  if (!seq.reduced) j["failure_pos"] = seq.failure_pos;
  Json coroots = Json::array();
  for (const Coord& c : seq.coroots) coroots.push_back(c);
  j["coroots"] = std::move(coroots);

  // the sequence must enumerate the outside coroots exactly once each
  std::vector<Coord> expected;
  for (const CorootLine& line : pd.outside)
    expected.push_back(pd.rd.pos_coroots[line.index]);
  std::vector<Coord> got = seq.coroots;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  j["covers_outside"] = (expected == got);
  return j;
}

Json pole_json(const PoleReport& rep, const LFactorProduct& basic_numerator) {
  Json j;
  j["type"] = to_string(rep.type);
  j["node"] = rep.node;
  j["d0"] = rep.d0;
  j["strip_bound"] = rat_json(rep.strip_bound);
  j["max_order"] = rep.max_order;
  j["completed"] = rep.completed;
  Json entries = Json::array();
  for (const PoleEntry& e : rep.entries) {
    Json ej;
    ej["x"] = rat_json(e.x);
    ej["dprime"] = e.dprime;
    ej["order"] = e.order;
    entries.push_back(std::move(ej));
  }
  j["entries"] = std::move(entries);
  j["violations"] = rep.violations;
  j["basic_numerator"] = product_json(basic_numerator);
  return j;
}

} // namespace parpole::cli
