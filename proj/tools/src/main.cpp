#include <parpole_cli/render.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

using namespace parpole;
using cli::Json;
using cli::Target;

namespace {

struct CommonOpts {
  std::vector<std::string> targets;
  std::string out;
  bool timings = false;
  int jobs = 1;
  double budget = 0.0;
};

void attach_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("targets", o.targets,
                  "targets like E7 (all nodes) or E7:3 (one node); "
                  "empty runs the default scope, which leaves E8 out");
  cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
  cmd->add_flag("--timings", o.timings,
                "report wall times; default prints 0 so reruns are "
                "byte-identical");
  cmd->add_option("--jobs", o.jobs, "worker threads across targets")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--budget", o.budget,
                  "per-target time budget in seconds; exhausted work is "
                  "reported as skipped, not failed");
}

std::optional<Deadline> deadline_from(double budget) {
  if (budget <= 0) return std::nullopt;
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(budget));
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
  }
}

ParabolicDatum build(CartanType t, int node) {
  return build_parabolic(build_root_datum(t), node);
}

struct JobOut {
  Json j;
  bool bad = false;
};

int cmd_tables(const CommonOpts& o, const std::string& format) {
  std::vector<Target> targets = cli::resolve_targets(o.targets);
  if (format == "json") {
    auto rows = cli::run_ordered(targets, o.jobs, [](CartanType t, int node) {
      return cli::tables_json(build(t, node));
    });
    Json root = Json::array();
    for (Json& r : rows) root.push_back(std::move(r));
    emit(root.dump(2), o.out);
    return 0;
  }
  auto pds = cli::run_ordered(targets, o.jobs, [](CartanType t, int node) {
    return build(t, node);
  });
  std::string text;
  if (format == "text") {
    for (const ParabolicDatum& pd : pds) text += cli::tables_text(pd);
  } else { // latex: one block per type, targets grouped in order
    std::vector<std::pair<CartanType, std::vector<ParabolicDatum>>> groups;
    for (ParabolicDatum& pd : pds) {
      if (groups.empty() || !(groups.back().first == pd.rd.type))
        groups.push_back({pd.rd.type, {}});
      groups.back().second.push_back(std::move(pd));
    }
    for (auto& [t, rows] : groups) text += cli::tables_latex(t, rows) + "\n";
  }
  emit(text, o.out);
  return 0;
}

int cmd_verify(const CommonOpts& o, const std::vector<std::string>& checks) {
  std::vector<Target> targets = cli::resolve_targets(o.targets);
  std::set<std::string> which(checks.begin(), checks.end());
  if (which.empty())
    which.insert(check_names().begin(), check_names().end());
  for (const std::string& c : which)
    if (std::find(check_names().begin(), check_names().end(), c) ==
        check_names().end())
      throw CLI::ValidationError("--checks", "unknown check: " + c);

  double budget = o.budget;
  auto results =
      cli::run_ordered(targets, o.jobs, [&, budget](CartanType t, int node) {
        ParabolicDatum pd = build(t, node);
        RunLimits limits;
        limits.deadline = deadline_from(budget);
        JobOut out;
        out.j = Json::array();
        for (const CheckReport& r : run_checks(pd, which, limits)) {
          if (r.status == CheckStatus::failed) out.bad = true;
          out.j.push_back(cli::check_json(r, o.timings));
        }
        return out;
      });
  Json root = Json::array();
  bool bad = false;
  for (JobOut& r : results) {
    bad = bad || r.bad;
    for (Json& j : r.j) root.push_back(std::move(j));
  }
  emit(root.dump(2), o.out);
  return bad ? 1 : 0;
}

int cmd_appendix(const CommonOpts& o) {
  std::vector<Target> targets = cli::resolve_targets(o.targets);
  auto results = cli::run_ordered(targets, o.jobs, [](CartanType t, int node) {
    ParabolicDatum pd = build(t, node);
    std::vector<CellDiff> cells = compare_row(pd);
    JobOut out;
    out.j = cli::cells_json(pd, cells);
    for (const CellDiff& c : cells)
      if (c.kind == CellKind::mismatch) out.bad = true;
    return out;
  });
  Json root = Json::array();
  bool bad = false;
  for (JobOut& r : results) {
    bad = bad || r.bad;
    root.push_back(std::move(r.j));
  }
  emit(root.dump(2), o.out);
  return bad ? 1 : 0;
}

int cmd_quotient(const CommonOpts& o) {
  std::vector<Target> targets = cli::resolve_targets(o.targets);
  double budget = o.budget;
  auto results =
      cli::run_ordered(targets, o.jobs, [budget](CartanType t, int node) {
        ParabolicDatum pd = build(t, node);
        EnumResult er = enumerate_quotient(pd, {}, deadline_from(budget));
        JobOut out;
        out.j = cli::quotient_json(pd, er.stats, er.completed);
        out.bad = er.completed && er.stats.reps != expected_quotient_size(pd);
        return out;
      });
  Json root = Json::array();
  bool bad = false;
  for (JobOut& r : results) {
    bad = bad || r.bad;
    root.push_back(std::move(r.j));
  }
  emit(root.dump(2), o.out);
  return bad ? 1 : 0;
}

int cmd_words(const CommonOpts& o, bool certify, std::uint64_t node_cap) {
  std::vector<Target> targets = cli::resolve_targets(o.targets);
  auto results = cli::run_ordered(targets, o.jobs, [&](CartanType t, int node) {
    RootDatum rd = build_root_datum(t);
    ParabolicDatum pd = build_parabolic(rd, node);
    ReducedWord w = canonical_w0_word(rd, node);
    CorootSequenceResult seq = coroot_sequence(w, rd);
    JobOut out;
    out.j = cli::word_json(pd, w, seq);
    out.bad = !seq.reduced || !out.j["covers_outside"].get<bool>();
    if (certify) {
      CertifyOptions opt;
      opt.node_cap = node_cap;
      CheckReport rep = certify_swap_rules(rd, node, opt);
      if (rep.status == CheckStatus::failed) out.bad = true;
      out.j["certification"] = cli::check_json(rep, o.timings);
    }
    return out;
  });
  Json root = Json::array();
  bool bad = false;
  for (JobOut& r : results) {
    bad = bad || r.bad;
    root.push_back(std::move(r.j));
  }
  emit(root.dump(2), o.out);
  return bad ? 1 : 0;
}

int cmd_eisenstein(const CommonOpts& o) {
  std::vector<Target> targets = cli::resolve_targets(o.targets);
  double budget = o.budget;
  auto results =
      cli::run_ordered(targets, o.jobs, [budget](CartanType t, int node) {
        ParabolicDatum pd = build(t, node);
        PoleReport rep = eisenstein_poles(pd, deadline_from(budget));
        JobOut out;
        out.j = cli::pole_json(rep, basic_function_numerator(pd));
        out.bad = !rep.violations.empty();
        return out;
      });
  Json root = Json::array();
  bool bad = false;
  for (JobOut& r : results) {
    bad = bad || r.bad;
    root.push_back(std::move(r.j));
  }
  emit(root.dump(2), o.out);
  return bad ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact combinatorial data, L-factor normalizations and machine "
      "verification for maximal parabolic quotients of split simple groups"};
  app.require_subcommand(1);

  CommonOpts tables_o;
  std::string format = "json";
  CLI::App* tables = app.add_subcommand(
      "tables", "kappa, s_k, Lambda, level sets and normalizers per node");
  attach_common(tables, tables_o);
  tables->add_option("--format", format, "json, text or latex")
      ->check(CLI::IsMember({"json", "text", "latex"}));

  CommonOpts verify_o;
  std::vector<std::string> checks;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the combinatorial checks over the quotient");
  attach_common(verify, verify_o);
  verify->add_option("--checks", checks, "comma-separated subset of checks")
      ->delimiter(',');

  CommonOpts appendix_o;
  CLI::App* appendix = app.add_subcommand(
      "appendix-compare", "diff derived rows against the published table");
  attach_common(appendix, appendix_o);

  CommonOpts quotient_o;
  CLI::App* quotient = app.add_subcommand(
      "quotient", "enumerate the parabolic quotient and compare counts");
  attach_common(quotient, quotient_o);

  CommonOpts words_o;
  bool certify = false;
  std::uint64_t node_cap = 1'000'000;
  CLI::App* words = app.add_subcommand(
      "words", "canonical reduced words and their coroot sequences");
  attach_common(words, words_o);
  words->add_flag("--certify", certify,
                  "certify the pair-swap rules over the braid graph");
  words->add_option("--node-cap", node_cap, "braid graph size bound");

  CommonOpts eisen_o;
  CLI::App* eisen = app.add_subcommand(
      "eisenstein", "pole candidates of d * c_w across the quotient");
  attach_common(eisen, eisen_o);

  try {
    app.parse(argc, argv);
    if (tables->parsed()) return cmd_tables(tables_o, format);
    if (verify->parsed()) return cmd_verify(verify_o, checks);
    if (appendix->parsed()) return cmd_appendix(appendix_o);
    if (quotient->parsed()) return cmd_quotient(quotient_o);
    if (words->parsed()) return cmd_words(words_o, certify, node_cap);
    if (eisen->parsed()) return cmd_eisenstein(eisen_o);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
