// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "pmv/chain.hpp"
#include "pmv/closure.hpp"
#include "pmv/duality.hpp"
#include "pmv/homs.hpp"
#include "pmv/order_subalgebras.hpp"
#include "pmv/skeleton.hpp"
#include "pmv/square_oracle.hpp"
#include "support/oracles.hpp"
#include "support/suite.hpp"

using namespace pmv;

namespace {

// Wall-clock limits in seconds; zero means the criterion has none.
constexpr double kLimitC1 = 1.0;
constexpr double kLimitC3 = 120.0;
constexpr double kLimitC6 = 300.0;

// Largest product |A| * |B| taken into the coproduct check.
constexpr int kCoproductMaxSize = 729;
// Largest algebra taken into the adjunction check, and lattice bound.
constexpr int kAdjunctionMaxAlgebra = 9;
constexpr int kAdjunctionMaxLattice = 4;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok = false;
      note << what;
    }
  }
};

int failures = 0;

void criterion(int id, char const* title, double limit,
               std::function<void(Outcome&)> const& body) {
  Outcome o;
  auto const start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (std::exception const& e) {
    o.ok = false;
    o.note << "exception: " << e.what();
  }
  double const secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && limit > 0 && secs >= limit) {
    o.ok = false;
    o.note << "took " << secs << " s, limit " << limit << " s";
  }
  if (!o.ok) ++failures;
  std::printf("%s C%d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              o.ok ? "" : ": ", o.ok ? "" : o.note.str().c_str());
  std::fflush(stdout);
}

std::vector<std::string> strings(std::vector<GoodSeq> const& v) {
  std::vector<std::string> out;
  for (auto const& s : v) out.push_back(s.to_string());
  return out;
}

Poset leq_reduct(StructSpace const& x) {
  Poset p(x.size());
  int const r = x.leq_index();
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j)
      if (x.related(r, i, j)) p.set(i, j);
  return p;
}

bool is_chain_power(FinAlgebra const& a, int n) {
  int size = 1;
  for (int k = 0; size <= a.size(); ++k, size *= n + 1)
    if (size == a.size()) return find_isomorphism(a, chain_power(n, k)).has_value();
  return false;
}

void c1(Outcome& o) {
  o.require(candidate_sequences(4).size() == 14, "candidate count is not 14");
  auto const l = compute_Sn(4);
  std::vector<std::string> const expected = {
      "[1,1,1]",     "[3/4,1,1]",     "[3/4,3/4,1]",   "[2/4,1,1]",
      "[2/4,3/4,1]", "[2/4,2/4,1]",   "[1/4,2/4,3/4]"};
  o.require(strings(l.elements) == expected, "good sequences differ");
  std::vector<std::pair<int, int>> const covers = {
      {0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}};
  auto got = l.covers;
  std::sort(got.begin(), got.end());
  o.require(got == covers, "Hasse covers differ");
  o.require(l.elements[l.bottom].to_string() == "[1,1,1]", "wrong bottom");
  o.require(l.elements[l.top].to_string() == "[1/4,2/4,3/4]", "wrong top");
  auto irr = expected;
  irr.erase(irr.begin() + 1);
  o.require(strings(meet_irreducibles(l)) == irr,
            "meet-irreducibles are not all but [3/4,1,1]");
}

void c2(Outcome& o) {
  auto const good = is_good_sequence(GoodSeq::parse(4, "[2/4,2/4,1]"), CheckMode::full);
  o.require(good.good, "[2/4,2/4,1] reported not good");
  auto const bad = is_good_sequence(GoodSeq::parse(4, "[1/4,2/4,1]"), CheckMode::full);
  o.require(!bad.good && bad.witness &&
                bad.witness->describe(4) == "(1/4,1/4)⊕(2/4,2/4) = (3/4,3/4)",
            "[1/4,2/4,1] witness differs");
  o.require(!in_union(GoodSeq::parse(4, "[1/4,2/4,1]"), 3, 3),
            "(3/4,3/4) inside the union");
  auto const d = oracle_diff(4);
  bool cited = false;
  for (auto const& line : d.lines)
    if (line.starts_with("DISCREPANCY reference listing bullet 4 names [2/4,2/4,1]"))
      cited = true;
  o.require(cited, "no discrepancy line for bullet 4");
}

void c3(Outcome& o) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<GoodSeq> corner, full;
    for (auto const& s : candidate_sequences(n)) {
      if (is_good_sequence(s, CheckMode::corner).good) corner.push_back(s);
      if (is_good_sequence(s, CheckMode::full).good) full.push_back(s);
    }
    auto const tri = BinRel::triangle(n);
    auto const le = BinRel::leq(n);
    std::set<GoodSeq> from_oracle;
    for (auto const& r : square_subalgebras_oracle(n))
      if (tri.subset_of(r) && r.subset_of(le)) from_oracle.insert(rel_to_seq(r));
    std::set<GoodSeq> const a(corner.begin(), corner.end());
    std::set<GoodSeq> const b(full.begin(), full.end());
    o.require(a == b && b == from_oracle, "disagreement at n=" + std::to_string(n));
  }
}

void c4(Outcome& o) {
  for (int n = 1; n <= 12; ++n) {
    Chain const c(n);
    auto const subs = chain_subalgebras(c);
    o.require(subs == subalgebra_oracle(c), "oracle differs at n=" + std::to_string(n));
    int const m = static_cast<int>(subs.size());
    o.require(m == oracle::divisor_count(n), "count differs at n=" + std::to_string(n));
    Poset inclusion(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (std::includes(subs[j].carrier.begin(), subs[j].carrier.end(),
                          subs[i].carrier.begin(), subs[i].carrier.end()))
          inclusion.set(i, j);
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) divisors.push_back(d);
    Poset divides(static_cast<int>(divisors.size()));
    for (int i = 0; i < divides.size; ++i)
      for (int j = 0; j < divides.size; ++j)
        if (divisors[j] % divisors[i] == 0) divides.set(i, j);
    o.require(divides.size == m && find_poset_isomorphism(inclusion, divides),
              "lattice not isomorphic at n=" + std::to_string(n));
  }
}

void c5(Outcome& o) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      if (n % k) continue;
      auto const homs = hom_enumerate(FinAlgebra::chain(k), FinAlgebra::chain(n));
      std::vector<int> inclusion;
      for (int i = 0; i <= k; ++i) inclusion.push_back(i * (n / k));
      o.require(homs.size() == 1 && homs[0].map == inclusion,
                "hom(PL" + std::to_string(k) + ", PL" + std::to_string(n) + ")");
    }
  o.require(hom_enumerate(FinAlgebra::chain(3), FinAlgebra::chain(2)).empty(),
            "hom(PL3, PL2) not empty");
}

void c6(Outcome& o) {
  for (auto const& m : suite::duality_suite()) {
    auto const e = evaluation_e(m.algebra, m.n);
    o.require(e.bijective(), "e not bijective for " + m.name);
  }
  int members = 0;
  for (int p = 0; p <= 3; ++p)
    for_each_structure(2, p, [&](StructSpace const& x) {
      if (!xn_membership(x).member) return;
      ++members;
      o.require(evaluation_eps(x).isomorphism(), "eps not an isomorphism");
    });
  o.require(members > 0, "no members enumerated");
}

void c7(Outcome& o) {
  for (int p = 0; p <= 3; ++p)
    for_each_structure(2, p, [&](StructSpace const& x) {
      if (x2_axiom_check(x).holds() != xn_membership(x).member)
        o.require(false, "axioms and membership disagree on a " +
                             std::to_string(p) + "-point structure");
    });
}

void c8(Outcome& o) {
  auto const lattices = enumerate_distributive_lattices(kAdjunctionMaxLattice);
  for (auto const& m : suite::all()) {
    auto const& a = m.algebra;
    auto const dual = priestley_dual(skeleton(a).lattice);
    auto const reduct = leq_reduct(dual_space(a, m.n).space);
    o.require(find_poset_isomorphism(dual.poset, reduct).has_value(),
              "skeleton dual differs for " + m.name);
    o.require(skeleton_unit(a, m.n).injective, "unit not injective for " + m.name);
    if (a.size() > kAdjunctionMaxAlgebra) continue;
    for (auto const& l : lattices)
      o.require(adjunction_check(a, l, m.n).holds,
                "adjunction fails for " + m.name + " and " + l.label());
  }
  for (auto const& l : enumerate_distributive_lattices(8)) {
    if (!is_complemented(l)) continue;
    for (int n = 1; n <= 3; ++n) {
      auto const pw = priestley_power(n, l).algebra;
      auto const bp = boolean_power(n, atom_count(l));
      o.require(find_isomorphism(pw, bp).has_value(),
                "power over " + l.label() + " at n=" + std::to_string(n));
    }
  }
}

void c9(Outcome& o) {
  for (auto const& m : suite::all()) {
    bool const ac = is_algebraically_closed(m.algebra, m.n).verdict;
    o.require(ac == is_chain_power(m.algebra, m.n), "AC mismatch for " + m.name);
    auto const d = dual_space(m.algebra, m.n).space;
    if (d.size() >= 1 && d.size() <= 2)
      o.require(fhp_star_check(d, 2).verdict == ac, "FHP* mismatch for " + m.name);
    if (m.algebra.size() > 1)
      o.require(!is_existentially_closed(m.algebra, m.n).verdict,
                "EC true for " + m.name);
  }
  for (auto const& l : enumerate_distributive_lattices(8))
    o.require(is_algebraically_closed(l, 1).verdict == is_complemented(l),
              "AC vs complemented for " + l.label());
}

void c10(Outcome& o) {
  auto const all = suite::all();
  std::vector<StructSpace> duals;
  for (auto const& m : all) duals.push_back(dual_space(m.algebra, m.n).space);
  int checked = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      auto const& a = all[i];
      auto const& b = all[j];
      if (a.n != b.n || a.algebra.size() * b.algebra.size() > kCoproductMaxSize) continue;
      int const n = a.n;
      auto const d = dual_space(product(a.algebra, b.algebra), n).space;
      std::string const name = a.name + " x " + b.name;
      o.require(d.size() == duals[i].size() + duals[j].size(), "hom count for " + name);
      o.require(find_space_isomorphism(d, disjoint_union(duals[i], duals[j])).has_value(),
                "dual of " + name);
      ++checked;
    }
  o.require(checked > 0, "no pairs checked");
}

}  // namespace

int main() {
  criterion(1, "S_4 reproduction", kLimitC1, c1);
  criterion(2, "typo adjudication", 0, c2);
  criterion(3, "oracle equivalence n<=6", kLimitC3, c3);
  criterion(4, "subalgebras and divisors n<=12", 0, c4);
  criterion(5, "hom rigidity", 0, c5);
  criterion(6, "duality at desk scale", kLimitC6, c6);
  criterion(7, "X_2 axioms", 0, c7);
  criterion(8, "skeleton and Priestley powers", 0, c8);
  criterion(9, "AC and EC", 0, c9);
  criterion(10, "coproduct law", 0, c10);
  return failures == 0 ? 0 : 1;
}
