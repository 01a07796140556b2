#include <doctest.h>

#include <parpole/quotient.hpp>

#include <numeric>

using namespace parpole;

namespace {

ParabolicDatum pd_of(CartanType t, int node) {
  return build_parabolic(build_root_datum(t), node);
}

} // namespace

TEST_CASE("InvBits crosses the 64-bit boundary") {
  InvBits b;
  CHECK(b.count() == 0);
  b.set(0);
  b.set(63);
  b.set(64);
  b.set(119);
  CHECK(b.count() == 4);
  CHECK(b.test(63));
  CHECK(b.test(64));
  CHECK_FALSE(b.test(65));
  InvBits c;
  c.set(64);
  CHECK_FALSE(b < c); // hi compares first
  CHECK(c < b);
}

TEST_CASE("small quotients, counts and shape") {
  struct Row {
    CartanType t;
    int node;
    std::uint64_t reps;
    int max_length;
    std::vector<std::uint64_t> by_length;
  };
  const Row rows[] = {
      {{Series::G, 2}, 1, 6, 5, {1, 1, 1, 1, 1, 1}},
      {{Series::A, 3}, 2, 6, 4, {1, 1, 2, 1, 1}},
  };
  for (const Row& row : rows) {
    ParabolicDatum pd = pd_of(row.t, row.node);
    QuotientStats st = quotient_stats(pd);
    CHECK(st.reps == row.reps);
    CHECK(st.reps == expected_quotient_size(pd));
    CHECK(st.max_length == row.max_length);
    CHECK(st.by_length == row.by_length);
  }
}

TEST_CASE("representative count always matches the Weyl order quotient") {
  for (CartanType t : {CartanType{Series::B, 3}, {Series::C, 4}, {Series::D, 4},
                       {Series::F, 4}, {Series::E, 6}}) {
    RootDatum rd = build_root_datum(t);
    for (int node = 1; node <= t.rank; ++node) {
      ParabolicDatum pd = build_parabolic(rd, node);
      QuotientStats st = quotient_stats(pd);
      CHECK(st.reps == expected_quotient_size(pd));
      CHECK(st.reps == weyl_order(t) / levi_weyl_order(t, node));
      CHECK(st.max_length == static_cast<int>(pd.outside.size()));
      // Poincare symmetry of the quotient
      REQUIRE(st.by_length.size() == pd.outside.size() + 1);
      for (std::size_t i = 0; i < st.by_length.size(); ++i)
        CHECK(st.by_length[i] == st.by_length[st.by_length.size() - 1 - i]);
      CHECK(std::accumulate(st.by_length.begin(), st.by_length.end(),
                            std::uint64_t{0}) == st.reps);
    }
  }
}

TEST_CASE("minuscule E7 quotient") {
  ParabolicDatum pd = pd_of({Series::E, 7}, 7);
  QuotientStats st = quotient_stats(pd);
  CHECK(st.reps == 56);
  CHECK(st.max_length == 27);
  CHECK(st.edges == 84);
}

TEST_CASE("layer discipline and edge bookkeeping") {
  ParabolicDatum pd = pd_of({Series::B, 3}, 2);
  EnumCallbacks cb;
  int last_len = -1;
  InvBits last_inv;
  std::uint64_t reps = 0, edges = 0;
  cb.on_rep = [&](const CosetRep& r, const Profile& p) {
    ++reps;
    CHECK(r.inv.count() == r.length);
    if (r.length == last_len) CHECK(last_inv < r.inv);
    CHECK(r.length >= last_len);
    last_len = r.length;
    last_inv = r.inv;
    Profile q = profile_of(pd, r.inv);
    CHECK(q.m == p.m);
    int total = 0;
    for (int l = 1; l <= q.d0; ++l)
      for (int h = 1; h <= q.hmax; ++h) total += q.at(h, l);
    CHECK(total == r.length);
  };
  cb.on_edge = [&](const CoveringEdge& e) {
    ++edges;
    CHECK_FALSE(e.parent.inv.test(e.new_coroot));
    CHECK(e.simple >= 0);
    CHECK(e.simple < 3);
    const CorootLine& line = pd.outside[static_cast<std::size_t>(e.new_coroot)];
    InvBits child = e.parent.inv;
    child.set(e.new_coroot);
    Profile cp = profile_of(pd, child);
    CHECK(cp.at(line.h, line.lambda) ==
          e.parent_profile.at(line.h, line.lambda) + 1);
  };
  EnumResult er = enumerate_quotient(pd, cb);
  CHECK(er.completed);
  CHECK(er.stats.reps == reps);
  CHECK(er.stats.edges == edges);
  CHECK(reps == 12);
}

TEST_CASE("the full-set profile is the longest representative's") {
  for (CartanType t : {CartanType{Series::C, 3}, {Series::G, 2}, {Series::D, 4}}) {
    RootDatum rd = build_root_datum(t);
    for (int node = 1; node <= t.rank; ++node) {
      ParabolicDatum pd = build_parabolic(rd, node);
      InvBits all;
      for (std::size_t i = 0; i < pd.outside.size(); ++i)
        all.set(static_cast<int>(i));
      Profile p = profile_of(pd, all);
      CHECK(p.m == pd.full.m);
      CHECK(p.hmax == pd.full.hmax);
    }
  }
}

TEST_CASE("an expired deadline reports an incomplete enumeration") {
  ParabolicDatum pd = pd_of({Series::E, 6}, 4);
  EnumCallbacks cb;
  cb.on_rep = [](const CosetRep&, const Profile&) {};
  EnumResult er = enumerate_quotient(pd, cb,
                                     std::chrono::steady_clock::now() -
                                         std::chrono::seconds(1));
  CHECK_FALSE(er.completed);
  CHECK(er.stats.reps < expected_quotient_size(pd));
}
