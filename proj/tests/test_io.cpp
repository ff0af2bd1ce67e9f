#include <doctest.h>

#include "pmv/duality.hpp"
#include "pmv/error.hpp"
#include "pmv/io.hpp"
#include "support/suite.hpp"

using namespace pmv;

TEST_CASE("algebra JSON round trip") {
  for (auto const& m : suite::power_suite()) {
    CAPTURE(m.name);
    auto const j = to_json(m.algebra);
    auto const back = algebra_from_json(parse_json(j.dump()));
    CHECK(back == m.algebra);
    CHECK(to_json(back).dump() == j.dump());
  }
}

TEST_CASE("algebra JSON schema") {
  auto const j = to_json(FinAlgebra::chain(1));
  CHECK(j.dump() ==
        R"({"size":2,"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]],)"
        R"("oplus":[[0,1],[1,1]],"odot":[[0,0],[0,1]],"zero":0,"one":1,"label":"PL1"})");
}

TEST_CASE("space JSON round trip") {
  auto const d = dual_space(suite::three_chain_in_square(), 2).space;
  auto const j = to_json(d);
  CHECK(j["relations"].contains("[1]"));
  CHECK(j["relations"].contains("[1/2]"));
  auto const back = space_from_json(parse_json(j.dump(2)));
  CHECK(back == d);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("small schemas") {
  CHECK(to_json(Chain(3)).dump() == R"({"n":3})");
  CHECK(to_json(divisor_subalgebra(4, 2)).dump() == R"({"n":4,"carrier":[0,2,4]})");
  CHECK(to_json(GoodSeq{4, {2, 3, 4}}).dump() == R"({"n":4,"y":[2,3,4]})");
  CHECK(to_json(Hom{{0, 2, 4}}).dump() == R"({"map":[0,2,4]})");
  CHECK(chain_from_json(parse_json(R"({"n":5})")).n() == 5);
  CHECK(subalgebra_from_json(parse_json(R"({"n":6,"carrier":[0,3,6]})")).k() == 2);
  CHECK(goodseq_from_json(parse_json(R"({"n":4,"y":[2,2,4]})")) ==
        GoodSeq{4, {2, 2, 4}});
  CHECK(hom_from_json(parse_json(R"({"map":[1,0]})")).map == std::vector<int>{1, 0});
  Poset p(2);
  p.set(0, 1);
  CHECK(poset_from_json(to_json(p)) == p);
}

TEST_CASE("closure report JSON") {
  ClosureReport r;
  r.verdict = true;
  r.reason = ClosureReason::empty_dual;
  r.degenerate = true;
  auto const j = to_json(r);
  CHECK(j["reason"] == "empty-dual");
  CHECK(j["degenerate"] == true);
  CHECK(j["witness"].is_null());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_json("{\n  \"n\": 2,\n  \"size\": ]\n}");
    FAIL("parsed");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);
  }
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(algebra_from_json(parse_json(R"({"size":2})")), InvalidInput);
  CHECK_THROWS_AS(chain_from_json(parse_json(R"({"n":"x"})")), InvalidInput);
  CHECK_THROWS_AS(subalgebra_from_json(parse_json(R"({"n":6,"carrier":[0,4,6]})")),
                  InvalidInput);
  CHECK_THROWS_AS(goodseq_from_json(parse_json(R"({"n":4,"y":[3,2,4]})")),
                  InvalidInput);
  CHECK_THROWS_AS(space_from_json(parse_json(
                      R"({"n":2,"size":1,"relations":{"[3/4]":[]}})")),
                  InvalidInput);
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"size":2,"leq":[[0,1],[1,0]]})")),
                  InvalidInput);
}

TEST_CASE("lattice DOT") {
  auto const dot = to_dot(FinAlgebra::chain(2));
  CHECK(dot.find("a0 -> a1") != std::string::npos);
  CHECK(dot.find("a0 -> a2") == std::string::npos);
}
