#include "doctest.h"
#include "fock/canonical.hpp"
#include "support.hpp"

using namespace fock;

TEST_SUITE("canonical") {
  TEST_CASE("weight space basis") {
    auto ws = weight_space({1, 0}, {2, 3, 1}, 3, 2);
    CHECK(ws.dim() == 8);
    for (auto &mp : ws.basis)
      CHECK(census(mp, {1, 0}, 3) == std::vector<int>{2, 3, 1});
  }

  TEST_CASE("one-dimensional space") {
    auto t = canonical_basis({0, 0}, std::vector<int>{0, 0}, 2, 2, 1, testing::straightener(2, 2));
    CHECK(t.dim() == 1);
    CHECK(t.entries(0, 0).is_one());
  }

  TEST_CASE("bar matrix invariants") {
    auto A = bar_matrix(weight_space({1, 0}, {2, 3, 1}, 3, 2), testing::straightener(3, 2));
    CHECK(is_involution(A.entries));
    CHECK(is_unitriangular(A.entries, A.space.big));
  }

  TEST_CASE("reference matrices with sign +") {
    auto A = bar_matrix(weight_space({1, 0}, {2, 3, 1}, 3, 2), testing::straightener(3, 2));
    auto g = testing::load_golden("sigma_w_plus");
    CHECK(testing::compare_golden(canonical_basis(A, 1), g, g.labels).empty());
  }

  TEST_CASE("lattice and positivity conditions") {
    auto A = bar_matrix(weight_space({1, 0}, {2, 3, 1}, 3, 2), testing::straightener(3, 2));
    for (int sign : {1, -1}) {
      auto t = canonical_basis(A, sign);
      CHECK(is_unitriangular(t.entries, t.big));
      for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) {
          auto &x = t.entries(i, j);
          if (i == j || x.is_zero())
            continue;
          if (sign == 1) {
            CHECK(x.min_exp() >= 1);
            CHECK(positive_in_q(x));
          } else {
            CHECK(x.max_exp() <= -1);
            CHECK(positive_in_p(x));
          }
        }
    }
  }

  TEST_CASE("serialization") {
    auto t = canonical_basis({0, 0}, std::vector<int>{1, 1}, 2, 2, 1, testing::straightener(2, 2));
    auto j = to_json(t);
    CHECK(j["basis"].size() == t.dim());
    CHECK_FALSE(to_csv(t).empty());
    CHECK_FALSE(to_text(t).empty());
  }

  TEST_CASE("reordering") {
    auto t = canonical_basis({1, 0}, std::vector<int>{2, 3, 1}, 3, 2, 1, testing::straightener(3, 2));
    auto order = t.basis;
    std::reverse(order.begin(), order.end());
    auto r = t.reordered(order);
    CHECK(r.at(order[0], order[1]) == t.at(order[0], order[1]));
    order[0] = order[1];
    CHECK_THROWS(t.reordered(order));
  }
}
