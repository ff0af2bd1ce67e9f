#include <doctest.h>

#include "pmv/chain.hpp"
#include "pmv/error.hpp"
#include "support/oracles.hpp"

using namespace pmv;

TEST_CASE("chain operations") {
  Chain const c6(6);
  CHECK(c6.apply(Op::oplus, {2}, {3}) == ChainElem{5});
  CHECK(c6.apply(Op::odot, {4}, {3}) == ChainElem{1});
  CHECK(c6.apply(Op::meet, {4}, {3}) == ChainElem{3});
  CHECK(c6.apply(Op::join, {4}, {3}) == ChainElem{4});
  Chain const c2(2);
  CHECK(c2.apply(Op::oplus, {1}, {1}) == c2.one());
  CHECK(c2.apply(Op::odot, {1}, {1}) == c2.zero());
}

TEST_CASE("out-of-range elements are rejected") {
  Chain const c(3);
  CHECK_THROWS_AS(c.apply(Op::oplus, {4}, {0}), InvalidElement);
  CHECK_THROWS_AS(c.tau({-1}, {0}), InvalidElement);
  CHECK_THROWS_AS(Chain(0), InvalidInput);
}

TEST_CASE("tau") {
  Chain const c2(2);
  CHECK(c2.tau({1}, {1}) == c2.one());
  CHECK(c2.tau({1}, {0}) == c2.zero());
  Chain const c4(4);
  for (int x = 0; x <= 4; ++x) CHECK(c4.tau({0}, {x}) == c4.one());
}

TEST_CASE("format_value keeps fractions unreduced") {
  CHECK(format_value(0, 4) == "0");
  CHECK(format_value(4, 4) == "1");
  CHECK(format_value(2, 4) == "2/4");
  CHECK(Chain(6).format({3}) == "3/6");
}

TEST_CASE("subalgebras of small chains") {
  CHECK(chain_subalgebras(Chain(6)).size() == 4);
  CHECK(chain_subalgebras(Chain(4)).size() == 3);
  auto const one = chain_subalgebras(Chain(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].carrier == std::vector<int>{0, 1});

  auto const two = subalgebra_oracle(Chain(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].carrier == std::vector<int>{0, 2});
  CHECK(two[1].carrier == std::vector<int>{0, 1, 2});
  CHECK(subalgebra_oracle(Chain(1)).size() == 1);
  CHECK_THROWS_AS(subalgebra_oracle(Chain(13)), SizeLimitExceeded);
}

TEST_CASE("divisor law up to 12") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    auto const subs = chain_subalgebras(Chain(n));
    CHECK(subs == subalgebra_oracle(Chain(n)));
    CHECK(static_cast<int>(subs.size()) == oracle::divisor_count(n));
    for (auto const& s : subs) {
      CHECK(n % s.k() == 0);
      CHECK(is_closed_subset(n, s.carrier));
    }
  }
}

TEST_CASE("tau preserves every subalgebra") {
  for (int n = 1; n <= 12; ++n) {
    Chain const c(n);
    for (auto const& s : chain_subalgebras(c)) {
      for (int d = 0; d <= n; ++d)
        for (int x : s.carrier) CHECK(s.contains(c.tau({d}, {x}).num));
    }
  }
}

TEST_CASE("operation laws hold exhaustively") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    for (Op op : kAllOps) {
      for (int x = 0; x <= n; ++x) {
        for (int y = 0; y <= n; ++y) {
          CHECK(apply_op(op, x, y, n) == apply_op(op, y, x, n));
          if (y < n) CHECK(apply_op(op, x, y, n) <= apply_op(op, x, y + 1, n));
          for (int z = 0; z <= n; ++z) {
            CHECK(apply_op(op, apply_op(op, x, y, n), z, n) ==
                  apply_op(op, x, apply_op(op, y, z, n), n));
          }
        }
      }
    }
    for (int x = 0; x <= n; ++x) {
      CHECK(apply_op(Op::oplus, x, 0, n) == x);
      CHECK(apply_op(Op::odot, x, n, n) == x);
    }
  }
}
