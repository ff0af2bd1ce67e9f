#include <doctest.h>

#include <chrono>

#include "pmv/error.hpp"
#include "pmv/order_subalgebras.hpp"
#include "support/oracles.hpp"

using namespace pmv;

namespace {

GoodSeq s4(std::vector<int> y) { return GoodSeq{4, std::move(y)}; }

}  // namespace

TEST_CASE("rectangles") {
  auto const full = rectangle(6, 2, 3);
  CHECK(full.count() == 12);
  for (auto [x, y] : full.pairs()) CHECK((x <= 2 && y >= 3));

  SubalgebraSquare const s{divisor_subalgebra(6, 3), divisor_subalgebra(6, 2)};
  auto const r = rectangle(6, s, 2, 3);
  CHECK(r.pairs() ==
        std::vector<std::pair<int, int>>{{0, 3}, {0, 6}, {2, 3}, {2, 6}});

  CHECK(rectangle(2, 0, 0).pairs() ==
        std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}});
  CHECK_THROWS_AS(rectangle(4, 3, 2), InvalidInput);
  CHECK_THROWS_AS(rectangle(6, s, 1, 3), InvalidInput);
}

TEST_CASE("good sequence examples") {
  CHECK(is_good_sequence(s4({2, 3, 4}), CheckMode::corner).good);

  auto const bad = is_good_sequence(s4({3, 3, 3}), CheckMode::corner);
  REQUIRE_FALSE(bad.good);
  CHECK(bad.witness->op == Op::odot);
  CHECK(bad.witness->describe(4) == "(3/4,3/4)⊙(3/4,3/4) = (2/4,2/4)");

  auto const typo = is_good_sequence(s4({1, 2, 4}), CheckMode::full);
  REQUIRE_FALSE(typo.good);
  CHECK(typo.witness->describe(4) == "(1/4,1/4)⊕(2/4,2/4) = (3/4,3/4)");
  CHECK(is_good_sequence(s4({2, 2, 4}), CheckMode::full).good);
  CHECK(is_good_sequence(s4({2, 2, 4}), CheckMode::corner).good);
}

TEST_CASE("malformed sequences") {
  CHECK_THROWS_AS(is_good_sequence(s4({2, 1, 4}), CheckMode::full), InvalidInput);
  CHECK_THROWS_AS(is_good_sequence(s4({0, 2, 4}), CheckMode::full), InvalidInput);
  CHECK_THROWS_AS(is_good_sequence(s4({2, 3}), CheckMode::full), InvalidInput);
  CHECK_THROWS_AS(is_good_sequence(s4({2, 3, 5}), CheckMode::full), InvalidInput);
  CHECK_THROWS_AS(GoodSeq::parse(4, "[1/3,1,1]"), InvalidInput);
  CHECK_THROWS_AS(GoodSeq::parse(4, "2/4,1,1"), InvalidInput);
}

TEST_CASE("sequence parsing and printing") {
  auto const s = GoodSeq::parse(4, "[2/4, 3/4, 1]");
  CHECK(s.y == std::vector<int>{2, 3, 4});
  CHECK(s.to_string() == "[2/4,3/4,1]");
  CHECK(GoodSeq::parse(1, "[]").y.empty());
}

TEST_CASE("S_4") {
  auto const start = std::chrono::steady_clock::now();
  auto const l = compute_Sn(4);
  auto const elapsed = std::chrono::steady_clock::now() - start;
  CHECK(elapsed < std::chrono::seconds(1));
  CHECK(candidate_sequences(4).size() == 14);
  std::vector<GoodSeq> const expected{s4({4, 4, 4}), s4({3, 4, 4}),
                                      s4({3, 3, 4}), s4({2, 4, 4}),
                                      s4({2, 3, 4}), s4({2, 2, 4}),
                                      s4({1, 2, 3})};
  CHECK(l.elements == expected);
  CHECK(l.elements[l.bottom] == s4({4, 4, 4}));
  CHECK(l.elements[l.top] == s4({1, 2, 3}));
  std::vector<std::pair<int, int>> const covers{
      {0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}};
  CHECK(l.covers == covers);
  auto const irr = meet_irreducibles(l);
  CHECK(irr.size() == 6);
  CHECK(std::find(irr.begin(), irr.end(), s4({3, 4, 4})) == irr.end());
}

TEST_CASE("S_2 and S_1") {
  auto const l2 = compute_Sn(2);
  REQUIRE(l2.size() == 2);
  CHECK(l2.elements[l2.bottom].y == std::vector<int>{2});
  CHECK(l2.elements[l2.top].y == std::vector<int>{1});
  CHECK(meet_irreducibles(l2).size() == 2);

  auto const l1 = compute_Sn(1);
  REQUIRE(l1.size() == 1);
  CHECK(meet_irreducibles(l1).size() == 1);
  auto const r = seq_to_rel(l1.elements[0]);
  CHECK(r == BinRel::leq(1));
  CHECK(r == BinRel::triangle(1));
}

TEST_CASE("seq_to_rel and rel_to_seq") {
  CHECK(seq_to_rel(s4({4, 4, 4})) == BinRel::triangle(4));
  CHECK(BinRel::triangle(4).count() == 9);
  CHECK(seq_to_rel(s4({1, 2, 3})) == BinRel::leq(4));
  CHECK(BinRel::leq(4).count() == 15);

  // Union of C(0,0), C(1/6,2/6), C(2/6,3/6), C(3/6,5/6), C(1,1).
  BinRel fig(6);
  for (auto [x, y] : std::vector<std::pair<int, int>>{
           {0, 0}, {1, 2}, {2, 3}, {3, 5}, {4, 6}, {5, 6}, {6, 6}}) {
    for (int a = 0; a <= x; ++a)
      for (int b = y; b <= 6; ++b) fig.insert(a, b);
  }
  CHECK(rel_to_seq(fig) == GoodSeq{6, {2, 3, 5, 6, 6}});

  CHECK_THROWS_AS(rel_to_seq(BinRel::leq(4).intersect(BinRel::geq(4))),
                  InvalidInput);
  CHECK_THROWS_AS(rel_to_seq(BinRel::full(4)), InvalidInput);
  for (int n = 1; n <= 6; ++n)
    for (auto const& s : candidate_sequences(n)) CHECK(rel_to_seq(seq_to_rel(s)) == s);
}

TEST_CASE("candidate sequences are monotone and ordered") {
  for (int n = 1; n <= 7; ++n) {
    auto const c = candidate_sequences(n);
    CHECK(std::is_sorted(c.begin(), c.end(), std::greater<>()));
    for (auto const& s : c) CHECK_NOTHROW(s.validate());
  }
  // Catalan numbers count the candidates.
  CHECK(candidate_sequences(5).size() == 42);
  CHECK(candidate_sequences(6).size() == 132);
}

TEST_CASE("corner mode, full mode and explicit closure agree") {
  for (int n = 1; n <= 6; ++n) {
    for (auto const& s : candidate_sequences(n)) {
      CAPTURE(s.to_string());
      bool const corner = is_good_sequence(s, CheckMode::corner).good;
      bool const full = is_good_sequence(s, CheckMode::full).good;
      bool const closed =
          oracle::closed_in_square(n, oracle::union_of_rectangles(n, s.y));
      CHECK(corner == full);
      CHECK(full == closed);
      auto const r = seq_to_rel(s);
      CHECK(r.pairs().size() == oracle::union_of_rectangles(n, s.y).size());
      CHECK(r.is_subalgebra() == closed);
    }
  }
}

TEST_CASE("S_n is a lattice with the expected ends") {
  for (int n = 1; n <= 7; ++n) {
    auto const& l = relation_lattice(n);
    CHECK(seq_to_rel(l.elements[l.bottom]) == BinRel::triangle(n));
    CHECK(seq_to_rel(l.elements[l.top]) == BinRel::leq(n));
    CHECK(l.meet_irreducible[l.top]);
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        auto const meet = seq_to_rel(l.elements[a]).intersect(seq_to_rel(l.elements[b]));
        CHECK(l.find(rel_to_seq(meet)));
      }
  }
}

TEST_CASE("DOT export of S_4") {
  auto const dot = to_dot(compute_Sn(4));
  CHECK(dot.find("label=\"[3/4,1,1]\", style=dashed") != std::string::npos);
  CHECK(dot.find("label=\"[1,1,1]\", style=solid") != std::string::npos);
  CHECK(dot.find("n5 -> n6") != std::string::npos);
}
