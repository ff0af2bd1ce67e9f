#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmv/algebra.hpp"
#include "pmv/error.hpp"
#include "pmv/space.hpp"

namespace pmv {

enum class ClosureReason {
  holds,               // checker found no counterexample
  counterexample,      // checker witness attached
  discrete_dual,       // dual order discrete, other relations empty
  non_discrete_order,
  extra_relation,
  isolated_point,
  empty_dual,
};

std::string_view reason_name(ClosureReason r);

/// Surjections phi: X -> Z and psi: Y -> Z admitting no factorisation
/// phi = psi o lambda.
struct ClosureWitness {
  StructSpace z;
  StructSpace y;
  std::vector<int> phi;
  std::vector<int> psi;
};

struct ClosureReport {
  bool verdict = false;
  ClosureReason reason = ClosureReason::holds;
  std::optional<ClosureWitness> witness;
  std::string detail;
  bool degenerate = false;
};

/// Every structure with p points over S_n, one relation assignment at a
/// time. Throws SizeLimitExceeded beyond 2^24 assignments.
void for_each_structure(int n, int p,
                        std::function<void(StructSpace const&)> const& visit);

/// Members of X_n with at most max_points points, one per isomorphism class,
/// ordered by size. Only assignments where the relations containing each
/// pair form a principal filter of S_n (or none) are generated; every member
/// has this shape.
std::vector<StructSpace> enumerate_member_structures(int n, int max_points);

/// Dual finite homomorphism property against test structures of at most
/// bound points. Throws NotAMember unless X is in X_n.
ClosureReport fhp_star_check(StructSpace const& x, int bound,
                             SearchBudget budget = SearchBudget{});
/// Same with lambda required to be surjective.
ClosureReport fep_star_check(StructSpace const& x, int bound,
                             SearchBudget budget = SearchBudget{});

/// Dual order discrete and every other relation empty.
ClosureReport is_algebraically_closed(FinAlgebra const& a, int n,
                                      SearchBudget budget = SearchBudget{});
/// False for every nontrivial finite algebra (its dual points are isolated);
/// the one-element algebra is reported true with the degenerate flag.
ClosureReport is_existentially_closed(FinAlgebra const& a, int n,
                                      SearchBudget budget = SearchBudget{});

}  // namespace pmv
