#include "pmv/closure.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pmv/duality.hpp"

namespace pmv {

std::string_view reason_name(ClosureReason r) {
  switch (r) {
    case ClosureReason::holds: return "holds";
    case ClosureReason::counterexample: return "counterexample";
    case ClosureReason::discrete_dual: return "discrete-dual";
    case ClosureReason::non_discrete_order: return "non-discrete-order";
    case ClosureReason::extra_relation: return "non-empty-extra-relation";
    case ClosureReason::isolated_point: return "isolated-point";
    case ClosureReason::empty_dual: return "empty-dual";
  }
  return "?";
}

void for_each_structure(int n, int p,
                        std::function<void(StructSpace const&)> const& visit) {
  StructSpace x(n, p);
  int const bits = x.relation_count() * p * p;
  if (bits > 24) {
    throw SizeLimitExceeded("more than 2^24 relation assignments");
  }
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << bits); ++code) {
    int b = 0;
    for (int r = 0; r < x.relation_count(); ++r)
      for (int u = 0; u < p; ++u)
        for (int v = 0; v < p; ++v) x.set(r, u, v, code >> b++ & 1);
    visit(x);
  }
}

namespace {

std::vector<int> canonical_code(StructSpace const& x) {
  int const p = x.size();
  std::vector<int> perm(p);
  for (int i = 0; i < p; ++i) perm[i] = i;
  std::vector<int> best;
  do {
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(p) * p * x.relation_count());
    for (int r = 0; r < x.relation_count(); ++r)
      for (int u = 0; u < p; ++u)
        for (int v = 0; v < p; ++v)
          code.push_back(x.related(r, perm[u], perm[v]));
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<StructSpace> enumerate_member_structures(int n, int max_points) {
  auto const& l = relation_lattice(n);
  int const types = l.size() + 1;
  std::vector<StructSpace> out;
  for (int p = 0; p <= max_points; ++p) {
    int const cells = p * p;
    double const total = std::pow(types, cells);
    if (total > double(1 << 24)) {
      throw SizeLimitExceeded("too many candidate structures for n = " +
                              std::to_string(n) + ", " + std::to_string(p) +
                              " points");
    }
    std::set<std::vector<int>> seen;
    std::vector<int> type(cells, 0);
    for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(total);
         ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < cells; ++i) {
        type[i] = static_cast<int>(c % types);
        c /= types;
      }
      StructSpace x(n, p);
      bool plausible = true;
      for (int i = 0; i < cells && plausible; ++i) {
        int const u = i / std::max(p, 1), v = i % std::max(p, 1);
        if (u == v && type[i] == 0) plausible = false;
        if (type[i] == 0) continue;
        for (int r = 0; r < l.size(); ++r) {
          if (l.leq(type[i] - 1, r)) x.set(r, u, v);
        }
      }
      if (!plausible || !xn_membership(x).member) continue;
      if (seen.insert(canonical_code(x)).second) out.push_back(std::move(x));
    }
  }
  return out;
}

namespace {

ClosureReport lifting_check(StructSpace const& x, int bound, bool onto,
                            SearchBudget& budget) {
  if (!xn_membership(x, budget).member) {
    throw NotAMember("space is not in the dual category");
  }
  auto const tests = enumerate_member_structures(x.n(), bound);
  auto surjections = [&budget](StructSpace const& s, StructSpace const& t) {
    std::vector<std::vector<int>> out;
    for_each_morphism(
        s, t,
        [&out](std::vector<int> const& m) {
          out.push_back(m);
          return true;
        },
        budget, true);
    return out;
  };

  for (auto const& z : tests) {
    auto const phis = surjections(x, z);
    if (phis.empty()) continue;
    for (auto const& y : tests) {
      auto const psis = surjections(y, z);
      if (psis.empty()) continue;
      auto const lambdas =
          onto ? surjections(x, y) : morphisms(x, y, SearchBudget{budget.limit()});
      for (auto const& phi : phis) {
        for (auto const& psi : psis) {
          bool const lifts = std::any_of(
              lambdas.begin(), lambdas.end(), [&](auto const& lam) {
                for (int v = 0; v < x.size(); ++v) {
                  if (psi[lam[v]] != phi[v]) return false;
                }
                return true;
              });
          if (!lifts) {
            ClosureReport rep;
            rep.verdict = false;
            rep.reason = ClosureReason::counterexample;
            rep.witness = ClosureWitness{z, y, phi, psi};
            rep.detail = "no " + std::string(onto ? "surjective " : "") +
                         "lambda with phi = psi o lambda (|Z| = " +
                         std::to_string(z.size()) + ", |Y| = " +
                         std::to_string(y.size()) + ")";
            return rep;
          }
        }
      }
    }
  }
  return {true, ClosureReason::holds, std::nullopt, {}, false};
}

}  // namespace

ClosureReport fhp_star_check(StructSpace const& x, int bound,
                             SearchBudget budget) {
  return lifting_check(x, bound, false, budget);
}

ClosureReport fep_star_check(StructSpace const& x, int bound,
                             SearchBudget budget) {
  return lifting_check(x, bound, true, budget);
}

ClosureReport is_algebraically_closed(FinAlgebra const& a, int n,
                                      SearchBudget budget) {
  auto const d = dual_space(a, n, budget);
  auto const& x = d.space;
  auto const& l = x.lattice();
  ClosureReport rep;
  for (auto [u, v] : x.pairs(l.top)) {
    if (u != v) {
      rep.reason = ClosureReason::non_discrete_order;
      rep.detail = "points " + std::to_string(u) + " < " + std::to_string(v);
      return rep;
    }
  }
  for (int r = 0; r < l.size(); ++r) {
    if (r == l.top) continue;
    auto const ps = x.pairs(r);
    if (!ps.empty()) {
      rep.reason = ClosureReason::extra_relation;
      rep.detail = "relation " + l.elements[r].to_string() + " contains (" +
                   std::to_string(ps[0].first) + "," +
                   std::to_string(ps[0].second) + ")";
      return rep;
    }
  }
  rep.verdict = true;
  rep.reason = ClosureReason::discrete_dual;
  rep.detail = std::to_string(x.size()) + " isolated dual points";
  return rep;
}

ClosureReport is_existentially_closed(FinAlgebra const& a, int n,
                                      SearchBudget budget) {
  auto const d = dual_space(a, n, budget);
  if (d.space.size() == 0) {
    return {true, ClosureReason::empty_dual, std::nullopt,
            "empty dual space (one-element algebra)", true};
  }
  auto ac = is_algebraically_closed(a, n, budget);
  if (!ac.verdict) return ac;
  return {false, ClosureReason::isolated_point, std::nullopt,
          "dual point 0 is isolated", false};
}

}  // namespace pmv
