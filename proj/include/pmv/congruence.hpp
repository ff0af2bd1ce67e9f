#pragma once

#include <compare>
#include <vector>

#include "pmv/algebra.hpp"

namespace pmv {

/// A partition of the carrier, stored as block labels in restricted-growth
/// form (block_of[0] = 0, each new block gets the next label).
struct Congruence {
  std::vector<int> block_of;

  int block_count() const;
  bool related(int a, int b) const { return block_of[a] == block_of[b]; }
  /// this refines other (this is below other in the congruence lattice).
  bool refines(Congruence const& other) const;

  friend auto operator<=>(Congruence const&, Congruence const&) = default;
};

/// Relabels arbitrary block ids into restricted-growth form.
Congruence normalize(std::vector<int> labels);

bool is_congruence(FinAlgebra const& a, std::vector<int> const& block_of);

/// Enumerates set partitions with compatibility pruning. Refuses |A| > 12.
std::vector<Congruence> congruences_by_partition_scan(FinAlgebra const& a);

/// Join-closure of the principal congruences Cg(a, b). Refuses |A| > 64.
std::vector<Congruence> congruences_by_principal_closure(FinAlgebra const& a);

/// All congruences, sorted by (block count descending, labels); Delta first,
/// the full relation last. Uses the partition scan up to 12 elements.
std::vector<Congruence> congruences(FinAlgebra const& a);

Congruence principal_congruence(FinAlgebra const& a, int x, int y);
Congruence congruence_join(Congruence const& a, Congruence const& b);
Congruence congruence_meet(Congruence const& a, Congruence const& b);

/// Exactly two congruences; the one-element algebra is not simple.
bool is_simple(FinAlgebra const& a);

}  // namespace pmv
