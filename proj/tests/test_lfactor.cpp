#include <doctest.h>

#include <parpole/lfactor.hpp>

using namespace parpole;

namespace {

LKey k(int lambda, Rat c) { return LKey{lambda, c}; }

} // namespace

TEST_CASE("rational strings") {
  CHECK(to_string(Rat(7)) == "7");
  CHECK(to_string(Rat(-5, 2)) == "-5/2");
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("-5/2") == Rat(-5, 2));
  CHECK(rat_from_string(to_string(Rat(9, 4))) == Rat(9, 4));
}

TEST_CASE("canonical form merges and sorts") {
  LFactorProduct p = make_product({{k(2, 1), 1}, {k(1, 0), 2}, {k(2, 1), -1}});
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors[0].first == k(1, 0));
  CHECK(p.factors[0].second == 2);
  CHECK(p.exponent(k(1, 0)) == 2);
  CHECK(p.exponent(k(2, 1)) == 0);

  LFactorProduct q = make_product({{k(2, Rat(1, 2)), 1}, {k(1, 3), 1}});
  CHECK(q.factors[0].first.lambda == 1); // sorted by (lambda, c)
  CHECK(cancel(q) == q);
}

TEST_CASE("product arithmetic") {
  LFactorProduct x = make_product({{k(1, 0), 1}, {k(2, 1), 1}});
  LFactorProduct y = make_product({{k(1, 0), 1}});
  CHECK(div(x, x).empty());
  CHECK(mul(x, inverse(x)).empty());
  CHECK(div(x, y) == make_product({{k(2, 1), 1}}));
  CHECK(is_product_of_L(x));
  CHECK_FALSE(is_product_of_L(div(y, x)));
  CHECK(is_product_of_L(LFactorProduct{})); // empty product is 1
}

TEST_CASE("specialize keeps divisible twists") {
  LFactorProduct x =
      make_product({{k(1, 1), 1}, {k(2, 2), 2}, {k(4, 0), -1}, {k(3, 1), 1}});
  CHECK(specialize(x, 1) == x);
  CHECK(specialize(x, 2) == make_product({{k(2, 2), 2}, {k(4, 0), -1}}));
  CHECK(specialize(x, 3) == make_product({{k(3, 1), 1}}));
  CHECK(specialize(x, 5).empty());
}

TEST_CASE("pole locus basics") {
  PoleLocus a = pole_locus(make_product({{k(1, 0), 1}}), 1);
  REQUIRE(a.entries.size() == 1);
  CHECK(a.entries[0].x == Rat(0));
  CHECK(a.entries[0].order == 1);
  CHECK(a.dprime == 1);
  CHECK(a.annotation == kPoleLatticeAnnotation);

  // two factors sharing the hyperplane x = 0 stack
  PoleLocus b = pole_locus(make_product({{k(1, 0), 1}, {k(2, 0), 1}}), 1);
  REQUIRE(b.entries.size() == 1);
  CHECK(b.entries[0].order == 2);

  // the denominator lives on a different hyperplane
  PoleLocus c = pole_locus(make_product({{k(1, 0), 1}, {k(2, 1), -1}}), 1);
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].x == Rat(0));
  CHECK(c.entries[0].order == 1);
}

TEST_CASE("pole locus cancellation respects sublattices") {
  // L(s)/L(2s) at x = 0: every character killing the denominator kills the
  // numerator, so nothing survives
  PoleLocus none = pole_locus(make_product({{k(1, 0), 1}, {k(2, 0), -1}}), 1);
  CHECK(none.entries.empty());

  // L(2s)/L(s): a character of order 2 keeps the numerator pole
  PoleLocus kept = pole_locus(make_product({{k(2, 0), 1}, {k(1, 0), -1}}), 1);
  REQUIRE(kept.entries.size() == 1);
  CHECK(kept.entries[0].x == Rat(0));
  CHECK(kept.entries[0].order == 1);

  // specialized at d' = 2 only even twists contribute candidates
  PoleLocus sp =
      pole_locus(make_product({{k(1, Rat(1, 2)), 3}, {k(2, 1), 1}}), 2);
  REQUIRE(sp.entries.size() == 1);
  CHECK(sp.entries[0].x == Rat(-1, 2));
  CHECK(sp.entries[0].order == 1);
}

TEST_CASE("rendering") {
  CHECK(to_string(LFactorProduct{}) == "1");
  CHECK(to_string(make_product({{k(1, 0), 1}})) == "L(s, chi)");
  LFactorProduct p = make_product({{k(2, -1), 2}, {k(1, Rat(3, 2)), -1}});
  CHECK(to_string(p) == "L(s + 3/2, chi)^-1 * L(2s - 1, chi^2)^2");
  CHECK(to_string(k(3, Rat(-1, 3))) == "L(3s - 1/3, chi^3)");
}
