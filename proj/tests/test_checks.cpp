#include <doctest.h>

#include <parpole/checks.hpp>

#include <set>
#include <stdexcept>

using namespace parpole;

namespace {

ParabolicDatum pd_of(CartanType t, int node) {
  return build_parabolic(build_root_datum(t), node);
}

std::set<std::string> all_names() {
  return {check_names().begin(), check_names().end()};
}

} // namespace

TEST_CASE("every check verifies on a mixed sample") {
  struct Target {
    CartanType t;
    int node;
  };
  const Target targets[] = {
      {{Series::G, 2}, 1}, {{Series::G, 2}, 2}, {{Series::C, 2}, 1},
      {{Series::C, 2}, 2}, {{Series::B, 3}, 1}, {{Series::B, 3}, 2},
      {{Series::B, 3}, 3}, {{Series::C, 3}, 2}, {{Series::D, 4}, 2},
      {{Series::A, 4}, 2}, {{Series::F, 4}, 2}, {{Series::E, 6}, 4},
  };
  for (const Target& tg : targets) {
    ParabolicDatum pd = pd_of(tg.t, tg.node);
    std::vector<CheckReport> reps = run_checks(pd, all_names());
    REQUIRE(reps.size() == check_names().size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(reps[i].check == check_names()[i]); // canonical order
      CHECK(reps[i].status == CheckStatus::verified);
      CHECK(reps[i].counterexample.empty());
    }
  }
}

TEST_CASE("edge classification counts are frozen for two small parabolics") {
  {
    std::vector<CheckReport> reps = run_checks(pd_of({Series::G, 2}, 1), {"comb1"});
    REQUIRE(reps.size() == 1);
    const CheckReport& r = reps[0];
    CHECK(r.status == CheckStatus::verified);
    CHECK(r.info.at("edges") == "5");
    CHECK(r.info.at("i_route_edges") == "5");
    CHECK(r.info.at("ii_dependent_edges") == "0");
    CHECK(r.info.at("qualifying_edges") == "2");
  }
  {
    std::vector<CheckReport> reps = run_checks(pd_of({Series::B, 3}, 2), {"comb1"});
    const CheckReport& r = reps[0];
    CHECK(r.status == CheckStatus::verified);
    CHECK(r.info.at("edges") == "14");
    CHECK(r.info.at("i_route_edges") == "13");
    CHECK(r.info.at("ii_dependent_edges") == "1");
    CHECK(r.info.at("qualifying_edges") == "6");
  }
}

TEST_CASE("an expired budget skips enumeration checks but not profile checks") {
  ParabolicDatum pd = pd_of({Series::E, 6}, 4);
  RunLimits limits;
  limits.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  std::vector<CheckReport> reps = run_checks(pd, all_names(), limits);
  for (const CheckReport& r : reps) {
    bool enumeration = r.check == "comb-" || r.check == "comb+" ||
                       r.check == "comb1" || r.check == "productL" ||
                       r.check == "strip";
    if (enumeration) {
      CHECK(r.status == CheckStatus::skipped);
      CHECK_FALSE(r.reason.empty());
    } else {
      CHECK(r.status == CheckStatus::verified);
    }
  }
}

TEST_CASE("unknown check names are rejected") {
  ParabolicDatum pd = pd_of({Series::A, 2}, 1);
  CHECK_THROWS_AS(run_checks(pd, {"comb"}), std::invalid_argument);
  CHECK_THROWS_AS(run_checks(pd, {"comb-", "nope"}), std::invalid_argument);
}

TEST_CASE("single-check wrappers pick the right check") {
  ParabolicDatum pd = pd_of({Series::B, 2}, 1);
  CHECK(check_comb1(pd).check == "comb1");
  CHECK(check_comb1(pd).status == CheckStatus::verified);
  CHECK(check_lemma_direct(pd).check == "direct");
  CHECK(check_profile_symmetry(pd).check == "symmetry");
  CHECK(check_strip(pd).status == CheckStatus::verified);
}

TEST_CASE("type A d0 reports the vacuous-lambda marker") {
  CheckReport r = check_d0(pd_of({Series::A, 5}, 3));
  CHECK(r.status == CheckStatus::verified);
  CHECK(r.info.at("vacuous_lambda_ge_2") == "true");
  CheckReport rb = check_d0(pd_of({Series::B, 3}, 2));
  CHECK(rb.info.count("vacuous_lambda_ge_2") == 0);
}

TEST_CASE("reports carry the type and node they were run on") {
  std::vector<CheckReport> reps = run_checks(pd_of({Series::C, 3}, 2), {"direct", "d0"});
  REQUIRE(reps.size() == 2);
  for (const CheckReport& r : reps) {
    CHECK(r.type == CartanType{Series::C, 3});
    CHECK(r.node == 2);
    CHECK(r.millis >= 0);
  }
}
