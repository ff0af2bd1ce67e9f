#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmv/algebra.hpp"
#include "pmv/error.hpp"
#include "pmv/space.hpp"

namespace pmv {

/// The chain {0..n} carrying every relation of S_n.
StructSpace alter_ego(int n);

/// D(A): the homomorphisms A -> P\L_n in lexicographic order, with
/// (u, v) in R iff (u(a), v(a)) in R for every a.
struct DualSpace {
  StructSpace space;
  std::vector<Hom> points;
};
DualSpace dual_space(FinAlgebra const& a, int n,
                     SearchBudget budget = SearchBudget{});

/// E(X): the morphisms X -> alter_ego(n) in lexicographic order, with
/// pointwise operations.
struct DualAlgebra {
  FinAlgebra algebra;
  std::vector<std::vector<int>> maps;
};
DualAlgebra dual_algebra(StructSpace const& x,
                         SearchBudget budget = SearchBudget{});

/// e_A(a)(u) = u(a).
struct EvaluationE {
  Hom map;
  int source_size = 0;
  int target_size = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};
EvaluationE evaluation_e(FinAlgebra const& a, int n,
                         SearchBudget budget = SearchBudget{});

/// eps_X(x)(alpha) = alpha(x).
struct EvaluationEps {
  std::vector<int> map;
  int source_size = 0;
  int target_size = 0;
  bool injective = false;
  bool surjective = false;
  bool reflecting = false;
  bool isomorphism() const { return injective && surjective && reflecting; }
};
/// Throws NotAMember unless xn_membership holds.
EvaluationEps evaluation_eps(StructSpace const& x,
                             SearchBudget budget = SearchBudget{});

/// Separation test: distinct points and every missing pair of every relation
/// are separated by a morphism into the alter ego.
struct MembershipReport {
  bool member = true;
  std::string witness;  // empty when member
  /// Separating morphisms, one per requirement, deduplicated and sorted;
  /// their product embeds X into a power of the alter ego.
  std::vector<std::vector<int>> embedding;
};
MembershipReport xn_membership(StructSpace const& x,
                               SearchBudget budget = SearchBudget{});

/// Finite reading of the three axioms for n = 2: (a) the triangle relation
/// is inside the order, (b) the order is a partial order, (c) each pair with
/// x <= y but not x triangle y is cut by an upset U and a downset D.
struct X2Report {
  bool a = true;
  bool b = true;
  bool c = true;
  std::string witness_a;
  std::string witness_b;
  std::string witness_c;
  bool holds() const { return a && b && c; }
};
/// Throws InvalidInput for spaces over n != 2.
X2Report x2_axiom_check(StructSpace const& x);

/// Congruences of A against subsets of D(A): Y maps to the kernel of the
/// points in Y; the check passes when this is an order-reversing bijection
/// onto Con(A).
struct CongruenceSubstructureReport {
  bool holds = false;
  int congruence_count = 0;
  int substructure_count = 0;
};
CongruenceSubstructureReport congruence_substructure_check(
    FinAlgebra const& a, int n, SearchBudget budget = SearchBudget{});

}  // namespace pmv
