#include <doctest.h>

#include <parpole/cartan.hpp>

#include <stdexcept>

using namespace parpole;

TEST_CASE("simply laced matrices") {
  CartanMatrix a3 = cartan_matrix({Series::A, 3});
  CHECK(a3 == CartanMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});

  // E8 chain 1-3-4-5-6-7-8 with 2 hanging off 4
  CartanMatrix e8 = cartan_matrix({Series::E, 8});
  CHECK(e8[0][2] == -1);
  CHECK(e8[1][3] == -1);
  CHECK(e8[0][1] == 0);
  CHECK(e8[3][4] == -1);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(e8[i][j] == e8[j][i]);
}

TEST_CASE("double and triple bond asymmetry") {
  // A[i][j] = <alpha_j, alpha_i^vee>: the short root's row carries the -2
  CartanMatrix b3 = cartan_matrix({Series::B, 3});
  CHECK(b3[2][1] == -2);
  CHECK(b3[1][2] == -1);

  CartanMatrix c3 = cartan_matrix({Series::C, 3});
  CHECK(c3[1][2] == -2);
  CHECK(c3[2][1] == -1);

  CartanMatrix f4 = cartan_matrix({Series::F, 4});
  CHECK(f4[2][1] == -2);
  CHECK(f4[1][2] == -1);

  CartanMatrix g2 = cartan_matrix({Series::G, 2});
  CHECK(g2[0][1] == -3);
  CHECK(g2[1][0] == -1);

  CHECK(edge_count(b3, 1, 2) == 2);
  CHECK(edge_count(b3, 0, 1) == 1);
  CHECK(edge_count(b3, 0, 2) == 0);
  CHECK(edge_count(g2, 0, 1) == 3);
}

TEST_CASE("weyl group orders") {
  CHECK(weyl_order({Series::A, 5}) == 720);
  CHECK(weyl_order({Series::B, 4}) == 384);
  CHECK(weyl_order({Series::C, 4}) == 384);
  CHECK(weyl_order({Series::D, 5}) == 1920);
  CHECK(weyl_order({Series::D, 3}) == 24); // D3 = A3
  CHECK(weyl_order({Series::E, 6}) == 51840);
  CHECK(weyl_order({Series::E, 7}) == 2903040);
  CHECK(weyl_order({Series::E, 8}) == 696729600);
  CHECK(weyl_order({Series::F, 4}) == 1152);
  CHECK(weyl_order({Series::G, 2}) == 12);
}

TEST_CASE("levi orders from deleted nodes") {
  CHECK(levi_weyl_order({Series::E, 8}, 4) == 1440); // A2 x A1 x A4
  CHECK(levi_weyl_order({Series::A, 5}, 3) == 36);   // A2 x A2
  CHECK(levi_weyl_order({Series::B, 4}, 1) == 48);   // B3
  CHECK(levi_weyl_order({Series::B, 4}, 4) == 24);   // A3
  CHECK(levi_weyl_order({Series::D, 5}, 5) == 120);  // A4
  CHECK(levi_weyl_order({Series::G, 2}, 1) == 2);

  CartanMatrix a3 = cartan_matrix({Series::A, 3});
  CHECK(subdiagram_weyl_order(a3, {0, 2}) == 4);
  CHECK(subdiagram_weyl_order(a3, {}) == 1);
  CHECK(subdiagram_weyl_order(a3, {0, 1, 2}) == 24);
}

TEST_CASE("type parsing and bounds") {
  CHECK(type_from_string("E8") == CartanType{Series::E, 8});
  CHECK(type_from_string("B12") == CartanType{Series::B, 12});
  CHECK(to_string(CartanType{Series::D, 7}) == "D7");

  for (const char* bad : {"H4", "A0", "B1", "D2", "E5", "E9", "F5", "G3", "A13", "", "B", "3B"})
    CHECK_THROWS_AS(type_from_string(bad), std::invalid_argument);

  CHECK(is_valid({Series::D, 3}));
  CHECK_FALSE(is_valid({Series::D, 2}));
  CHECK_FALSE(is_valid({Series::A, 13}));
}
