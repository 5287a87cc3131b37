#include "doctest.h"
#include "fock/weights.hpp"

using namespace fock;

TEST_SUITE("weights") {
  TEST_CASE("weight correspondence example") {
    Charges sl{1, 0};
    auto mp = parse_multipartition("[[1,1],[1]]");
    Weight w = label_weight(mp, sl, 3, false);
    auto dc = corresponding_dot(sl, w, 3, 2);
    CHECK(dc.charges_n == Charges{2, 1, -2});
    Weight expect = zero_weight(2, true);
    expect.lam = {2, 1};
    expect.d = -2;
    CHECK(dc.wdot == expect);
    CHECK(content_of_weight(w, sl, 3) == std::vector<int>{2, 1, 0});
    CHECK(content_of_weight(dc.wdot, dc.charges_n, 2) == std::vector<int>{0, 0});
    CHECK(wt_dot_of_l_label({mp, sl}, 3, 2) == dc.wdot);
  }

  TEST_CASE("inner product") {
    CHECK(inner_product(fundamental(0, 3), delta_weight(3)) == 1);
    CHECK(inner_product(delta_weight(3), delta_weight(3)) == 0);
    CHECK(inner_product(simple_root(1, 3), simple_root(1, 3)) == 2);
    CHECK(inner_product(simple_root(1, 3), simple_root(2, 3)) == -1);
  }

  TEST_CASE("content round trip") {
    Charges s{1, 0};
    std::vector<int> c{2, 3, 1};
    CHECK(content_of_weight(weight_of_content(s, 3, c), s, 3) == c);
    CHECK(weight_is_attained(s, weight_of_content(s, 3, c), 3));
  }

  TEST_CASE("reflection") {
    Weight w = fundamental(1, 3);
    CHECK(weyl_reflect(w, 1) == w - simple_root(1, 3));
    CHECK(weyl_reflect(weyl_reflect(w, 2), 2) == w);
  }

  TEST_CASE("delta charge") {
    CHECK(delta_charge({0, 0}, 3) == 0);
    CHECK(d_shift({1, 0}, {1, 0}, 3) == 0);
    CHECK(delta_charge({4, 0}, 3) == 1);
  }
}
