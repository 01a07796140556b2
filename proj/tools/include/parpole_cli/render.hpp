#pragma once

#include <parpole/appendix.hpp>
#include <parpole/checks.hpp>
#include <parpole/eisenstein.hpp>
#include <parpole/words.hpp>

#include <nlohmann/json.hpp>

#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace parpole::cli {

// Insertion-ordered JSON keeps field order intentional and output
// byte-stable across runs and job counts.
using Json = nlohmann::ordered_json;

using Target = std::pair<CartanType, int>; // (type, node)

// The scope used when no targets are given: every node of A1..A6, B2..B6,
// C2..C6, D4..D6, G2, F4, E6 and E7. E8 runs only when named explicitly.
std::vector<Target> default_scope();

// Tokens are "B3" (all nodes) or "B3:2" (one node). Empty -> default scope.
std::vector<Target> resolve_targets(const std::vector<std::string>& tokens);

Json rat_json(const Rat& r);
Json product_json(const LFactorProduct& p);
Json tables_json(const ParabolicDatum& pd);
std::string tables_text(const ParabolicDatum& pd);
std::string tables_latex(CartanType t, const std::vector<ParabolicDatum>& rows);
Json check_json(const CheckReport& r, bool timings);
Json cells_json(const ParabolicDatum& pd, const std::vector<CellDiff>& cells);
Json quotient_json(const ParabolicDatum& pd, const QuotientStats& st,
                   bool completed);
Json word_json(const ParabolicDatum& pd, const ReducedWord& w,
               const CorootSequenceResult& seq);
Json pole_json(const PoleReport& rep, const LFactorProduct& basic_numerator);

// Runs fn(type, node) over the targets with `jobs` workers; results come back
// in target order regardless of scheduling. Worker exceptions rethrow here.
template <typename F>
auto run_ordered(const std::vector<Target>& targets, int jobs, F&& fn) {
  using R = std::invoke_result_t<F&, CartanType, int>;
  std::vector<R> out(targets.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < targets.size(); ++i)
      out[i] = fn(targets[i].first, targets[i].second);
    return out;
  }
  std::vector<std::exception_ptr> errors(targets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= targets.size()) return;
      try {
        out[i] = fn(targets[i].first, targets[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

} // namespace parpole::cli
