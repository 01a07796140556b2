#include <doctest.h>

#include <parpole/words.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

using namespace parpole;

namespace {

std::set<Coord> outside_coroot_set(const ParabolicDatum& pd) {
  std::set<Coord> out;
  for (const CorootLine& line : pd.outside)
    out.insert(pd.rd.pos_coroots[static_cast<std::size_t>(line.index)]);
  return out;
}

std::set<Coord> word_coroot_set(const ReducedWord& w, const RootDatum& rd) {
  CorootSequenceResult seq = coroot_sequence(w, rd);
  REQUIRE(seq.reduced);
  return {seq.coroots.begin(), seq.coroots.end()};
}

} // namespace

TEST_CASE("canonical word for the middle node of A3") {
  RootDatum rd = build_root_datum({Series::A, 3});
  ReducedWord w = canonical_w0_word(rd, 2);
  CHECK(w.canonical);
  CHECK(w.length() == 4);
  CHECK(w.letters == std::vector<int>{1, 0, 2, 1});
  CHECK(to_string(w) == "s2 s3 s1 s2");

  CorootSequenceResult seq = coroot_sequence(w, rd);
  CHECK(seq.reduced);
  CHECK(seq.failure_pos == -1);
  REQUIRE(seq.coroots.size() == 4);
  CHECK(seq.coroots[0] == Coord{0, 1, 0});
  CHECK(seq.coroots[1] == Coord{1, 1, 0});
  CHECK(seq.coroots[2] == Coord{0, 1, 1});
  CHECK(seq.coroots[3] == Coord{1, 1, 1});
}

TEST_CASE("canonical word for C3 node 2") {
  RootDatum rd = build_root_datum({Series::C, 3});
  ReducedWord w = canonical_w0_word(rd, 2);
  CHECK(w.length() == 7);
  CHECK(to_string(w) == "s2 s3 s1 s2 s3 s1 s2");
  CorootSequenceResult seq = coroot_sequence(w, rd);
  REQUIRE(seq.reduced);
  const std::vector<Coord> expected = {
      {0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 2, 2},
      {0, 1, 2}, {1, 1, 1}, {1, 1, 2},
  };
  CHECK(seq.coroots == expected);
}

TEST_CASE("canonical words are reduced and sweep the outside coroots") {
  for (CartanType t : {CartanType{Series::A, 4}, {Series::B, 4}, {Series::C, 3},
                       {Series::D, 4}, {Series::D, 5}, {Series::G, 2},
                       {Series::F, 4}, {Series::E, 6}}) {
    RootDatum rd = build_root_datum(t);
    for (int node = 1; node <= t.rank; ++node) {
      ParabolicDatum pd = build_parabolic(rd, node);
      ReducedWord w = canonical_w0_word(rd, node);
      CHECK(w.length() == static_cast<int>(pd.outside.size()));
      CHECK(word_coroot_set(w, rd) == outside_coroot_set(pd));
      bool closed_form = t.series != Series::E && t.series != Series::F;
      CHECK(w.canonical == closed_form);
    }
  }
}

TEST_CASE("expected coroot tables agree with the computed sequences") {
  int covered = 0;
  for (CartanType t : {CartanType{Series::A, 2}, {Series::A, 3}, {Series::A, 4},
                       {Series::B, 2}, {Series::B, 3}, {Series::B, 4},
                       {Series::C, 2}, {Series::C, 3}, {Series::C, 4},
                       {Series::D, 3}, {Series::D, 4}, {Series::G, 2}}) {
    RootDatum rd = build_root_datum(t);
    for (int node = 1; node <= t.rank; ++node) {
      std::vector<Coord> table = expected_coroot_table(t, node);
      if (table.empty()) continue;
      ++covered;
      CorootSequenceResult seq = coroot_sequence(canonical_w0_word(rd, node), rd);
      REQUIRE(seq.reduced);
      CHECK(seq.coroots == table);
    }
  }
  CHECK(covered > 10);
}

TEST_CASE("B2 node 1 table, written out by hand") {
  // coroot coordinates: alpha1^vee, then the two composites; the middle one
  // is the lambda = 2 coroot of the short root e1
  const std::vector<Coord> expected = {{1, 0}, {2, 1}, {1, 1}};
  CHECK(expected_coroot_table({Series::B, 2}, 1) == expected);
  RootDatum rd = build_root_datum({Series::B, 2});
  CorootSequenceResult seq = coroot_sequence(canonical_w0_word(rd, 1), rd);
  CHECK(seq.coroots == expected);
}

TEST_CASE("a repeated letter is flagged, not thrown") {
  RootDatum rd = build_root_datum({Series::A, 2});
  ReducedWord w;
  w.letters = {0, 0};
  CorootSequenceResult seq = coroot_sequence(w, rd);
  CHECK_FALSE(seq.reduced);
  CHECK(seq.failure_pos == 1);
}

TEST_CASE("braid moves preserve the coroot multiset and reducedness") {
  std::mt19937 gen(20240817);
  for (CartanType t : {CartanType{Series::B, 3}, {Series::C, 4}, {Series::D, 4},
                       {Series::G, 2}, {Series::F, 4}}) {
    RootDatum rd = build_root_datum(t);
    for (int node = 1; node <= t.rank; ++node) {
      ReducedWord w = canonical_w0_word(rd, node);
      std::set<Coord> base = word_coroot_set(w, rd);
      for (int step = 0; step < 40; ++step) {
        std::vector<std::pair<int, BraidRelation>> moves = braid_moves(w, rd.a);
        if (moves.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        auto [pos, rel] = moves[pick(gen)];
        w = braid_move(w, pos, rel, rd);
        CHECK(word_coroot_set(w, rd) == base);
      }
    }
  }
}

TEST_CASE("braid_move rejects a position without the pattern") {
  RootDatum rd = build_root_datum({Series::A, 3});
  ReducedWord w = canonical_w0_word(rd, 2); // letters 1,0,2,1
  // letters at 0,1 are s2,s1: adjacent, so a commuting move must throw
  CHECK_THROWS_AS(braid_move(w, 0, BraidRelation::a, rd), std::invalid_argument);
  CHECK_THROWS_AS(braid_move(w, 3, BraidRelation::b, rd), std::invalid_argument);
}

TEST_CASE("swap-rule certification, frozen graph statistics") {
  struct Row {
    CartanType t;
    int node;
    const char* pairs;
    const char* reversible;
    const char* unrealized;
    const char* words;
  };
  const Row rows[] = {
      {{Series::A, 3}, 2, "6", "1", "0", "2"},
      {{Series::A, 5}, 3, "36", "9", "0", "42"},
      {{Series::B, 3}, 2, "21", "2", "3", "4"},
      {{Series::C, 3}, 2, "21", "2", "3", "4"},
      {{Series::C, 4}, 2, "55", "6", "8", "25"},
      {{Series::C, 4}, 3, "66", "9", "11", "70"},
      {{Series::B, 4}, 3, "66", "9", "11", "70"},
      {{Series::D, 4}, 2, "36", "2", "13", "4"},
      {{Series::D, 5}, 2, "78", "6", "20", "25"},
      {{Series::D, 5}, 3, "105", "10", "37", "144"},
  };
  for (const Row& row : rows) {
    CheckReport r = certify_swap_rules(build_root_datum(row.t), row.node);
    CHECK(r.status == CheckStatus::verified);
    CHECK(r.info.at("pairs") == row.pairs);
    CHECK(r.info.at("reversible_pairs") == row.reversible);
    CHECK(r.info.at("unrealized_swaps") == row.unrealized);
    CHECK(r.info.at("words") == row.words);
  }
}

TEST_CASE("certification skip reasons") {
  CheckReport last = certify_swap_rules(build_root_datum({Series::C, 3}), 3);
  CHECK(last.status == CheckStatus::skipped);
  CHECK(last.reason == "swap rules cover nodes below the rank only");

  for (int node : {3, 4}) {
    CheckReport spin = certify_swap_rules(build_root_datum({Series::D, 4}), node);
    CHECK(spin.status == CheckStatus::skipped);
    CHECK(spin.reason == "swap rules do not cover the spin nodes");
  }

  CheckReport g = certify_swap_rules(build_root_datum({Series::G, 2}), 1);
  CHECK(g.status == CheckStatus::skipped);
  CHECK(g.reason == "no labeled swap rules for this type");

  CertifyOptions tiny;
  tiny.node_cap = 1;
  CheckReport capped = certify_swap_rules(build_root_datum({Series::B, 3}), 2, tiny);
  CHECK(capped.status == CheckStatus::skipped);
  CHECK(capped.reason == "braid graph exceeds the node cap");
}
