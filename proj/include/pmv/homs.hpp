#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pmv/algebra.hpp"
#include "pmv/error.hpp"

namespace pmv {

/// Greedy generating set: scans the carrier in index order and keeps every
/// element not yet in the subuniverse generated by the ones kept so far.
std::vector<int> generating_set(FinAlgebra const& a);

/// Calls visit(map) for every homomorphism source -> target; stops early when
/// visit returns false. Backtracks over images of a generating set and
/// propagates the partial map through the operation tables.
void for_each_hom(FinAlgebra const& source, FinAlgebra const& target,
                  std::function<bool(std::vector<int> const&)> const& visit,
                  SearchBudget& budget);

/// All homomorphisms source -> target in lexicographic order of their maps.
std::vector<Hom> hom_enumerate(FinAlgebra const& source,
                               FinAlgebra const& target,
                               SearchBudget budget = SearchBudget{});

/// An isomorphism a -> b, if one exists. Candidate images are restricted to
/// elements with the same invariant profile.
std::optional<Hom> find_isomorphism(FinAlgebra const& a, FinAlgebra const& b,
                                    SearchBudget budget = SearchBudget{});

/// The separating family of homomorphisms A -> P\L_n and the coordinates
/// of every element of A in P\L_n^k, k = number of homomorphisms.
struct PmvEmbedding {
  int n = 1;
  std::vector<Hom> homs;
  std::vector<std::vector<int>> coordinates;

  int k() const noexcept { return static_cast<int>(homs.size()); }
};

/// Membership of A in the quasi-variety generated by P\L_n: present iff the
/// homomorphisms into the chain separate the points of A.
std::optional<PmvEmbedding> pmv_membership(FinAlgebra const& a, int n,
                                           SearchBudget budget = SearchBudget{});

}  // namespace pmv
