#include "support/suite.hpp"

#include <set>

#include "pmv/skeleton.hpp"

namespace suite {

namespace {

std::string carrier_name(pmv::FinAlgebra const& amb, std::vector<int> const& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += amb.name(c[i]);
  }
  return s + "}";
}

}  // namespace

std::vector<Member> const& duality_suite() {
  static std::vector<Member> const members = [] {
    std::vector<Member> out;
    for (int n : {2, 3, 4}) {
      auto const sq = pmv::chain_power(n, 2);
      for (auto const& c : pmv::all_subuniverses(sq)) {
        auto sub = pmv::restrict_to(sq, c);
        out.push_back({"PL" + std::to_string(n) + "^2" + carrier_name(sq, c),
                       std::move(sub.algebra), n});
      }
    }
    auto const cube = pmv::chain_power(2, 3);
    std::set<std::vector<int>> seen;
    int const m = cube.size();
    for (int a = 0; a < m; ++a) {
      for (int b = a; b < m; ++b) {
        for (int c = b; c < m; ++c) {
          std::vector<int> gens{a, b, c};
          auto carrier = pmv::subuniverse_generated(cube, gens);
          if (!seen.insert(carrier).second) continue;
          auto sub = pmv::restrict_to(cube, carrier);
          out.push_back({"PL2^3" + carrier_name(cube, carrier),
                         std::move(sub.algebra), 2});
        }
      }
    }
    return out;
  }();
  return members;
}

std::vector<Member> const& power_suite() {
  static std::vector<Member> const members = [] {
    std::vector<Member> out;
    for (int n : {1, 2, 3}) {
      for (int k : {1, 2, 3}) {
        if (n == 3 && k == 3) continue;
        auto a = pmv::chain_power(n, k);
        out.push_back({a.label(), a, n});
      }
      for (int size : {3, 4}) {
        auto p = pmv::priestley_power(n, pmv::chain_lattice(size));
        out.push_back({p.algebra.label(), std::move(p.algebra), n});
      }
    }
    return out;
  }();
  return members;
}

std::vector<Member> all() {
  auto out = duality_suite();
  auto const& p = power_suite();
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

pmv::FinAlgebra three_chain_in_square() {
  auto const sq = pmv::chain_power(2, 2);
  // (0,0) = 0, (0,1) = 2, (1,1) = 8 in the lexicographic encoding.
  return pmv::restrict_to(sq, {0, 2, 8}).algebra;
}

}  // namespace suite
