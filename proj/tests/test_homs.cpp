#include <doctest.h>

#include "pmv/error.hpp"
#include "pmv/homs.hpp"
#include "support/oracles.hpp"
#include "support/suite.hpp"

using namespace pmv;

TEST_CASE("hom examples") {
  auto const h = hom_enumerate(FinAlgebra::chain(2), FinAlgebra::chain(4));
  REQUIRE(h.size() == 1);
  CHECK(h[0].map == std::vector<int>{0, 2, 4});
  CHECK(hom_enumerate(FinAlgebra::chain(3), FinAlgebra::chain(2)).empty());

  auto const proj = hom_enumerate(chain_power(2, 2), FinAlgebra::chain(2));
  REQUIRE(proj.size() == 2);
  CHECK(proj[0].map == std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2, 2});
  CHECK(proj[1].map == std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2});
}

TEST_CASE("hom rigidity between chains") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= 8; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto const h = hom_enumerate(FinAlgebra::chain(k), FinAlgebra::chain(n));
      if (n % k == 0) {
        REQUIRE(h.size() == 1);
        for (int i = 0; i <= k; ++i) CHECK(h[0].map[i] == i * (n / k));
      } else {
        CHECK(h.empty());
      }
    }
  }
}

TEST_CASE("backtracking agrees with the raw scan") {
  for (auto const& m : suite::duality_suite()) {
    if (m.algebra.size() > 9) continue;
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(m.name);
      CAPTURE(n);
      auto const fast = hom_enumerate(m.algebra, FinAlgebra::chain(n));
      auto const slow = oracle::homs_by_scan(m.algebra, FinAlgebra::chain(n));
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].map == slow[i]);
    }
  }
}

TEST_CASE("search budget") {
  SearchBudget tiny(3);
  CHECK_THROWS_AS(hom_enumerate(chain_power(2, 3), chain_power(2, 2), tiny),
                  BudgetExceeded);
  try {
    hom_enumerate(chain_power(2, 3), chain_power(2, 2), SearchBudget(3));
  } catch (BudgetExceeded const& e) {
    CHECK(e.budget() == 3);
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("pmv membership") {
  auto const sq = pmv_membership(chain_power(2, 2), 2);
  REQUIRE(sq);
  CHECK(sq->k() == 2);
  auto const two = pmv_membership(FinAlgebra::chain(1), 2);
  REQUIRE(two);
  CHECK(two->k() == 1);
  CHECK_FALSE(pmv_membership(FinAlgebra::chain(3), 2));
}

TEST_CASE("coproduct law for hom counts") {
  auto const& s = suite::duality_suite();
  for (std::size_t i = 0; i < s.size(); i += 7) {
    for (std::size_t j = 0; j < s.size(); j += 11) {
      auto const& a = s[i].algebra;
      auto const& b = s[j].algebra;
      if (a.size() * b.size() > 64) continue;
      int const n = 2;
      auto const c = FinAlgebra::chain(n);
      CAPTURE(s[i].name);
      CAPTURE(s[j].name);
      CHECK(hom_enumerate(product(a, b), c).size() ==
            hom_enumerate(a, c).size() + hom_enumerate(b, c).size());
    }
  }
}

TEST_CASE("isomorphism search") {
  auto const sq = chain_power(2, 2);
  auto const pr = product(FinAlgebra::chain(2), FinAlgebra::chain(2));
  CHECK(find_isomorphism(sq, pr));
  CHECK_FALSE(find_isomorphism(FinAlgebra::chain(3), chain_power(1, 2)));
  auto const iso = find_isomorphism(product(FinAlgebra::chain(1), FinAlgebra::chain(2)),
                                    product(FinAlgebra::chain(2), FinAlgebra::chain(1)));
  REQUIRE(iso);
  CHECK(iso->injective());
}
