#include <doctest.h>

#include <algorithm>

#include "pmv/congruence.hpp"
#include "pmv/error.hpp"
#include "support/oracles.hpp"
#include "support/suite.hpp"

using namespace pmv;

TEST_CASE("congruence examples") {
  CHECK(congruences(FinAlgebra::chain(4)).size() == 2);
  CHECK(congruences(chain_power(2, 2)).size() == 4);
  CHECK(congruences(FinAlgebra::trivial()).size() == 1);
}

TEST_CASE("simplicity") {
  for (auto const& s : chain_subalgebras(Chain(6))) {
    auto const sub = restrict_to(FinAlgebra::chain(6), s.carrier);
    CHECK(is_simple(sub.algebra));
  }
  CHECK_FALSE(is_simple(chain_power(2, 2)));
  CHECK_FALSE(is_simple(FinAlgebra::trivial()));
}

TEST_CASE("partition scan agrees with the raw oracle") {
  for (auto const& m : suite::all()) {
    if (m.algebra.size() > 8) continue;
    CAPTURE(m.name);
    auto mine = congruences(m.algebra);
    auto ref = oracle::congruences_by_scan(m.algebra);
    std::vector<std::vector<int>> labels;
    for (auto const& c : mine) labels.push_back(c.block_of);
    std::sort(labels.begin(), labels.end());
    std::sort(ref.begin(), ref.end());
    CHECK(labels == ref);
  }
}

TEST_CASE("principal closure agrees with the partition scan on 6..12") {
  int checked = 0;
  for (auto const& m : suite::all()) {
    int const size = m.algebra.size();
    if (size < 6 || size > 12) continue;
    CAPTURE(m.name);
    auto a = congruences_by_partition_scan(m.algebra);
    auto b = congruences_by_principal_closure(m.algebra);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("congruences form a lattice") {
  for (auto const& m : suite::duality_suite()) {
    if (m.algebra.size() > 12) continue;
    auto const cs = congruences(m.algebra);
    CHECK(cs.front().block_count() == m.algebra.size());
    CHECK(cs.back().block_count() == 1);
    for (auto const& x : cs) {
      for (auto const& y : cs) {
        auto const meet = congruence_meet(x, y);
        auto const join = congruence_join(x, y);
        CHECK(std::find(cs.begin(), cs.end(), meet) != cs.end());
        CHECK(std::find(cs.begin(), cs.end(), join) != cs.end());
      }
    }
  }
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(congruences_by_partition_scan(chain_power(2, 3)),
                  SizeLimitExceeded);
  CHECK_THROWS_AS(congruences_by_principal_closure(chain_power(2, 4)),
                  SizeLimitExceeded);
  CHECK(congruences(chain_power(2, 3)).size() == 8);
}
