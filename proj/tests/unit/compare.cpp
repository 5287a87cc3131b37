#include "doctest.h"
#include "fock/compare.hpp"
#include "support.hpp"

using namespace fock;

TEST_SUITE("compare") {
  TEST_CASE("identity bijection witnesses self-similarity") {
    auto t = canonical_basis({1, 0}, std::vector<int>{2, 3, 1}, 3, 2, 1, testing::straightener(3, 2));
    Bijection id;
    for (auto &mp : t.basis)
      id[mp] = mp;
    CHECK(similar(t, t, id).verified);
    CHECK(similar_any(t, t));
  }

  TEST_CASE("broken bijections are rejected") {
    auto t = canonical_basis({1, 0}, std::vector<int>{2, 3, 1}, 3, 2, 1, testing::straightener(3, 2));
    Bijection b;
    for (auto &mp : t.basis)
      b[mp] = t.basis.front();
    CHECK_THROWS_AS(similar(t, t, b), BijectionInvalid);
  }

  TEST_CASE("different nonzero counts are never similar") {
    auto a = canonical_basis({1, 0}, std::vector<int>{1, 1, 1}, 3, 2, 1, testing::straightener(3, 2));
    auto b = canonical_basis({4, -3}, std::vector<int>{1, 1, 1}, 3, 2, 1, testing::straightener(3, 2));
    CHECK(nonzero_count(a) == 21);
    CHECK(nonzero_count(b) == 22);
    CHECK_FALSE(similar_any(a, b));
  }

  TEST_CASE("sigma-dot words for tau") {
    for (int l = 2; l <= 4; ++l)
      for (int i = 1; i < l; ++i) {
        auto f = tau_dot_factorization(i, l);
        CHECK(acts_as_tau(f.word, i, l, 11));
      }
  }

  TEST_CASE("gamma graph") {
    auto g = gamma_graph({1, 0}, 1, 8, 3);
    bool found = false;
    for (auto &e : g.edges)
      found |= e.from == Charges{4, -3} && e.to == Charges{-3, 4};
    CHECK(found);
    CHECK(g.components.size() == 1);
    CHECK(orbit_length({1, 0}, 3) == 0);
  }

  TEST_CASE("translation family") {
    CHECK(translation_family({1, 0}, 0, 3) == Charges{1, 0});
    CHECK(translation_family({1, 0}, 1, 3) == Charges{4, -3});
    CHECK(translation_family({1, 0}, 2, 3) == Charges{7, -6});
  }

  TEST_CASE("theorem 1 harness") {
    auto r = verify_theorem1({1, 0}, {2, 3, 1}, 2, 3, 2, testing::straightener(3, 2));
    CHECK(r.verified());
    auto bad = verify_theorem1({1, 0}, {2, 3, 1}, 0, 3, 2, testing::straightener(3, 2));
    CHECK_FALSE(bad.hypothesis);
    CHECK_FALSE(bad.verified());
  }
}
