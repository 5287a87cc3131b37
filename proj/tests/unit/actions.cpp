#include "doctest.h"
#include "fock/actions.hpp"

using namespace fock;

TEST_SUITE("actions") {
  TEST_CASE("f on the empty label") {
    Charges s{0, 0};
    auto v = f_action(0, FockVector::basis({{}, {}}, s), 1, 2);
    // both components receive their 0-node; the later one in node order sees one addable node above it
    REQUIRE(v.coeffs.size() == 2);
    CHECK(v.coeffs.at({{1}, {}}) == LaurentPoly::q());
    CHECK(v.coeffs.at({{}, {1}}) == LaurentPoly(1));
  }

  TEST_CASE("divided powers") {
    Charges s{0, 0};
    auto v = f_action(0, FockVector::basis({{}, {}}, s), 2, 2);
    REQUIRE(v.coeffs.size() == 1);
    CHECK(v.coeffs.at({{1}, {1}}) == LaurentPoly(1));
    CHECK(f_action(0, FockVector::basis({{}, {}}, s), 3, 2).is_zero());
  }

  TEST_CASE("e undoes a single f on a one-node label") {
    Charges s{1, 0};
    auto v = e_action(1, FockVector::basis({{1}, {}}, s), 1, 3);
    REQUIRE(v.coeffs.size() == 1);
    CHECK(v.coeffs.count({{}, {}}) == 1);
  }

  TEST_CASE("t acts diagonally") {
    Charges s{1, 0};
    Multipartition mp{{1, 1}, {1}};
    auto v = t_action(0, FockVector::basis(mp, s), 3);
    REQUIRE(v.coeffs.size() == 1);
    CHECK(v.coeffs.at(mp).is_monomial());
    CHECK(v.coeffs.at(mp).min_exp() == node_stats(mp, s, 3, 0).M);
  }

  TEST_CASE("adjointness on a small label") {
    Charges s{1, 0};
    Multipartition mp{{1}, {1}};
    for (int i = 0; i < 3; ++i) {
      auto fv = f_action(i, FockVector::basis(mp, s), 1, 3);
      for (auto &[mu, c] : fv.coeffs) {
        auto u = FockVector::basis(mu, s);
        CHECK(bilinear_form(e_action(i, u, 1, 3), FockVector::basis(mp, s), 3) ==
              bilinear_form(u, fv, 3));
      }
    }
  }

  TEST_CASE("dotted operators use p = -q^-1") {
    CHECK(detail::power(1, true) == -LaurentPoly::q(-1));
    CHECK(detail::power(2, true) == LaurentPoly::q(-2));
  }
}
