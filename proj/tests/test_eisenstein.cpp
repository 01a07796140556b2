#include <doctest.h>

#include <parpole/eisenstein.hpp>

#include <algorithm>

using namespace parpole;

namespace {

ParabolicDatum pd_of(CartanType t, int node) {
  return build_parabolic(build_root_datum(t), node);
}

bool has_entry(const PoleReport& rep, Rat x, int dprime, int order) {
  for (const PoleEntry& e : rep.entries)
    if (e.x == x && e.dprime == dprime && e.order == order) return true;
  return false;
}

} // namespace

TEST_CASE("rank one poles") {
  PoleReport rep = eisenstein_poles(pd_of({Series::A, 1}, 1));
  CHECK(rep.completed);
  CHECK(rep.d0 == 1);
  CHECK(rep.strip_bound == Rat(1));
  CHECK(rep.max_order == 1);
  REQUIRE(rep.entries.size() == 2);
  CHECK(has_entry(rep, Rat(-1), 1, 1));
  CHECK(has_entry(rep, Rat(0), 1, 1));
  CHECK(rep.violations.empty());
  CHECK(basic_function_numerator(pd_of({Series::A, 1}, 1)) ==
        make_product({{LKey{1, Rat(1)}, 1}}));
}

TEST_CASE("A2 node 1, half-integer strip") {
  PoleReport rep = eisenstein_poles(pd_of({Series::A, 2}, 1));
  CHECK(rep.strip_bound == Rat(3, 2));
  CHECK(rep.max_order == 1);
  REQUIRE(rep.entries.size() == 3);
  CHECK(has_entry(rep, Rat(-3, 2), 1, 1));
  CHECK(has_entry(rep, Rat(-1, 2), 1, 1));
  CHECK(has_entry(rep, Rat(1, 2), 1, 1));
  CHECK(basic_function_numerator(pd_of({Series::A, 2}, 1)) ==
        make_product({{LKey{1, Rat(3, 2)}, 1}}));
}

TEST_CASE("G2 node 1 produces a double pole and an order-2 character") {
  ParabolicDatum pd = pd_of({Series::G, 2}, 1);
  PoleReport rep = eisenstein_poles(pd);
  CHECK(rep.completed);
  CHECK(rep.d0 == 2);
  CHECK(rep.strip_bound == Rat(5, 2));
  CHECK(rep.max_order == 2);
  CHECK(rep.violations.empty());

  std::vector<Rat> trivial, quadratic;
  for (const PoleEntry& e : rep.entries)
    (e.dprime == 1 ? trivial : quadratic).push_back(e.x);
  CHECK(trivial == std::vector<Rat>{Rat(-5, 2), Rat(-3, 2), Rat(-1, 2), Rat(0),
                                    Rat(1, 2), Rat(3, 2)});
  CHECK(quadratic == std::vector<Rat>{Rat(-1, 2), Rat(0)});
  CHECK(has_entry(rep, Rat(-1, 2), 1, 2));

  CHECK(basic_function_numerator(pd) ==
        make_product({{LKey{1, Rat(5, 2)}, 1}, {LKey{2, Rat(1)}, 1}}));
}

TEST_CASE("pole reports satisfy strip and lattice bounds on a sweep") {
  for (CartanType t : {CartanType{Series::B, 3}, {Series::C, 3},
                       {Series::D, 4}, {Series::A, 4}}) {
    RootDatum rd = build_root_datum(t);
    for (int node = 1; node <= t.rank; ++node) {
      ParabolicDatum pd = build_parabolic(rd, node);
      PoleReport rep = eisenstein_poles(pd);
      CHECK(rep.completed);
      CHECK(rep.violations.empty());
      CHECK(rep.strip_bound == pd.s_k + 1);
      int seen_max = 0;
      for (const PoleEntry& e : rep.entries) {
        CHECK(e.x <= rep.strip_bound);
        CHECK(-rep.strip_bound <= e.x);
        CHECK(e.dprime >= 1);
        CHECK(e.dprime <= pd.d0);
        CHECK(e.order >= 1);
        seen_max = std::max(seen_max, e.order);
        // x + s_k + 1 must land on a (1/lambda)-lattice for some lambda <= d0
        Rat shifted = e.x + rep.strip_bound;
        bool on_lattice = false;
        for (int l = 1; l <= pd.d0; ++l)
          if ((shifted * l).denominator() == 1) on_lattice = true;
        CHECK(on_lattice);
      }
      CHECK(seen_max == rep.max_order);
    }
  }
}

TEST_CASE("an expired deadline marks the report incomplete") {
  PoleReport rep = eisenstein_poles(pd_of({Series::E, 6}, 4),
                                    std::chrono::steady_clock::now() -
                                        std::chrono::seconds(1));
  CHECK_FALSE(rep.completed);
}
