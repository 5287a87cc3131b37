#include "doctest.h"
#include "fock/cones.hpp"

using namespace fock;

TEST_SUITE("cones") {
  TEST_CASE("phi and psi") {
    auto x = phi({7, -6}, {1, 0}, 3);
    REQUIRE(x.size() == 1);
    CHECK(x[0] == 2);
    CHECK(psi(ZVector{2}, {1, 0}, 3) == Charges{7, -6});
    CHECK_THROWS_AS(psi(QVector{mpq_class(1, 2)}, {1, 0}, 3), NonIntegral);
    CHECK_THROWS_AS(phi({1, 1}, {1, 0}, 3), std::invalid_argument);
  }

  TEST_CASE("Cartan data") {
    for (int l = 2; l <= 6; ++l) {
      CartanData cd(l);
      CHECK(cd.det() == l);
      QVector e(l - 1, 0);
      e[0] = 1;
      CHECK(cd.times(cd.solve(e)) == e);
    }
  }

  TEST_CASE("constructive c") {
    auto c = constructive_c({0, 0});
    CHECK(c == QVector{-2, -2});
    CHECK(cone_vertex({2, 2}) == QVector{2, 2});
    CHECK(m_M_lower_bound(0, {1, 0, 0}, 3) == -3);
  }

  TEST_CASE("Z-connectivity depends on the cone") {
    Cone c0{{0, 0}};
    Cone c1{constructive_c({0, 0})};
    CHECK_FALSE(z_connected({1, 1}, {0, 0}, c0, 3).connected);
    CHECK(z_connected({1, 1}, {0, 0}, c1, 3).connected);
  }

  TEST_CASE("stabilization constants") {
    auto k = stabilization_constants(std::vector<int>{1, 1, 1}, 3, 2);
    CHECK(k.M == 9);
    CHECK(k.c == 21);
    CHECK(k.N == 30);
    CHECK(k.N_conjectural == 3);
  }

  TEST_CASE("dominance") {
    CHECK(is_M_dominant({7, -6}, 13));
    CHECK_FALSE(is_M_dominant({7, -6}, 14));
  }

  TEST_CASE("connectivity audit") {
    auto b = b_of_M(0, {1, 0, 0}, 3);
    auto a = audit_connectivity(b, constructive_c(b), 10, 5, 5, 3);
    CHECK(a.pairs == 10);
    CHECK(a.connected == a.pairs);
  }
}
