#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmv/error.hpp"
#include "pmv/order_subalgebras.hpp"

namespace pmv {

/// A finite structured space <X, (R^X | R in S_n)>. Relation r corresponds to
/// relation_lattice(n).elements[r]. Finite spaces carry the discrete
/// topology, so none is stored.
class StructSpace {
 public:
  StructSpace(int n, int size);

  int n() const noexcept { return n_; }
  int size() const noexcept { return size_; }
  int relation_count() const noexcept { return static_cast<int>(rel_.size()); }
  RelLattice const& lattice() const { return relation_lattice(n_); }

  bool related(int r, int x, int y) const { return rel_[r][x * size_ + y] != 0; }
  void set(int r, int x, int y, bool on = true);
  /// Index of the named relation, e.g. "[1/2]".
  int relation_index(GoodSeq const& s) const;
  int leq_index() const { return lattice().top; }
  std::vector<std::pair<int, int>> pairs(int r) const;

  /// Set of relations containing (x, y), as a bitmask over relation indices.
  std::uint64_t type_of(int x, int y) const;

  /// R1 contained in R2 in S_n implies R1^X contained in R2^X.
  bool relations_monotone() const;

  /// The substructure induced on a sorted subset of the carrier.
  StructSpace induced(std::vector<int> const& points) const;

  friend auto operator<=>(StructSpace const&, StructSpace const&) = default;

 private:
  int n_;
  int size_;
  std::vector<std::vector<char>> rel_;
};

/// Checks that map preserves every relation.
bool is_morphism(StructSpace const& source, StructSpace const& target,
                 std::vector<int> const& map);

/// Calls visit for every morphism source -> target in lexicographic order;
/// stops when visit returns false. With surjective_only, non-surjective maps
/// are skipped.
void for_each_morphism(StructSpace const& source, StructSpace const& target,
                       std::function<bool(std::vector<int> const&)> const& visit,
                       SearchBudget& budget, bool surjective_only = false);

std::vector<std::vector<int>> morphisms(StructSpace const& source,
                                        StructSpace const& target,
                                        SearchBudget budget = SearchBudget{});

/// A bijection preserving and reflecting every relation.
std::optional<std::vector<int>> find_space_isomorphism(
    StructSpace const& a, StructSpace const& b,
    SearchBudget budget = SearchBudget{});

StructSpace disjoint_union(StructSpace const& a, StructSpace const& b);

/// Graphviz rendering: the order's covers as solid edges and pairs of the
/// bottom relation outside the order-loops as dashed edges.
std::string to_dot(StructSpace const& x);

}  // namespace pmv
