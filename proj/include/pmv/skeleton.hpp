#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pmv/algebra.hpp"
#include "pmv/error.hpp"

namespace pmv {

/// A finite partial order given by its full order matrix.
struct Poset {
  int size = 0;
  std::vector<char> order;  // order[i * size + j] = (i <= j)

  explicit Poset(int size = 0);
  bool leq(int i, int j) const { return order[i * size + j] != 0; }
  void set(int i, int j) { order[i * size + j] = 1; }
  /// Throws InvalidInput unless reflexive, antisymmetric, transitive.
  void validate() const;
  std::vector<std::pair<int, int>> pairs() const;
  std::vector<std::pair<int, int>> covers() const;
  friend auto operator<=>(Poset const&, Poset const&) = default;
};

std::optional<std::vector<int>> find_poset_isomorphism(Poset const& a,
                                                       Poset const& b);

/// True if oplus = join and odot = meet, i.e. the algebra is a bounded
/// distributive lattice in the PMV signature.
bool is_distributive_lattice(FinAlgebra const& a);

/// A lattice given by meet/join tables, embedded in the signature with
/// oplus = join and odot = meet. Validated.
FinAlgebra lattice_from_tables(int size, FinAlgebra::Table meet,
                               FinAlgebra::Table join, int zero, int one,
                               std::string label = {});

/// The lattice of down-sets of a poset.
FinAlgebra downset_lattice(Poset const& p);
FinAlgebra chain_lattice(int size);
FinAlgebra boolean_lattice(int atoms);

/// Every a has b with a meet b = 0 and a join b = 1.
bool is_complemented(FinAlgebra const& l);
int atom_count(FinAlgebra const& l);

/// Distributive lattices with at most max_size elements, one per
/// isomorphism class, ordered by size.
std::vector<FinAlgebra> enumerate_distributive_lattices(int max_size);

/// {a | a oplus a = a} with lattice operations restricted.
struct Skeleton {
  FinAlgebra lattice;
  std::vector<int> inclusion;  // skeleton index -> index in A
};
Skeleton skeleton(FinAlgebra const& a);

/// Restriction of h: A -> B to the skeletons.
Hom skeleton_functor_on_homs(FinAlgebra const& source,
                             FinAlgebra const& target, Hom const& h);

/// Lattice homomorphisms L -> 2, ordered pointwise.
struct PriestleyDual {
  Poset poset;
  std::vector<Hom> points;
};
PriestleyDual priestley_dual(FinAlgebra const& l);

/// Order-preserving maps from a poset into the chain {0..n}, lexicographic.
std::vector<std::vector<int>> monotone_maps(Poset const& p, int n);

/// P\L_n[L]: order-preserving maps from the dual of L into the chain.
struct PriestleyPower {
  FinAlgebra algebra;
  std::vector<std::vector<int>> maps;
  PriestleyDual dual;
};
PriestleyPower priestley_power(int n, FinAlgebra const& l);

/// P\L_n^k, the Boolean power over the Boolean algebra with k atoms.
FinAlgebra boolean_power(int n, int k);

/// a maps to (p -> max{d | p(tau_d(a)) = 1}). Throws NotAMember when A is
/// outside PMV_n.
struct SkeletonUnit {
  Hom map;
  PriestleyPower power;
  Skeleton skeleton;
  bool injective = false;
};
SkeletonUnit skeleton_unit(FinAlgebra const& a, int n,
                           SearchBudget budget = SearchBudget{});

/// Compares hom(A, P\L_n[L]) with hom(skeleton(A), L) through the maps
/// h -> counit o skeleton(h) and g -> power(g) o unit.
struct AdjunctionReport {
  bool holds = false;
  int power_homs = 0;
  int lattice_homs = 0;
  /// bijection[i] = index in hom(skeleton(A), L) of the image of the i-th
  /// element of hom(A, P\L_n[L]).
  std::vector<int> bijection;
};
AdjunctionReport adjunction_check(FinAlgebra const& a, FinAlgebra const& l,
                                  int n, SearchBudget budget = SearchBudget{});

}  // namespace pmv
