#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmv/chain.hpp"

namespace pmv {

/// A finite algebra in the signature {meet, join, oplus, odot, 0, 1}, given by
/// operation tables over the carrier {0, ..., size-1}.
///
/// Tables passed through from_tables() are validated: the lattice reduct
/// must be bounded and distributive, oplus and odot must be commutative,
/// associative and monotone with units zero and one. Algebras built by the
/// library's own constructions (products, subalgebras, powers) inherit these
/// laws and skip the cubic re-check.
class FinAlgebra {
 public:
  using Table = std::vector<int>;

  static FinAlgebra from_tables(int size, std::array<Table, 4> tables,
                                int zero, int one, std::string label = {});

  /// The chain P\L_n with element i = numerator i.
  static FinAlgebra chain(int n);

  /// The one-element algebra (0 = 1).
  static FinAlgebra trivial();

  int size() const noexcept { return size_; }
  int zero() const noexcept { return zero_; }
  int one() const noexcept { return one_; }
  std::string const& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  int apply(Op op, int a, int b) const {
    return tables_[static_cast<std::size_t>(op)][a * size_ + b];
  }
  Table const& table(Op op) const {
    return tables_[static_cast<std::size_t>(op)];
  }

  /// Lattice order: a <= b iff a meet b = a.
  bool leq(int a, int b) const { return apply(Op::meet, a, b) == a; }

  /// Optional human-readable element names, e.g. "(0,1/2)".
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::string name(int a) const;
  void set_names(std::vector<std::string> names);

  friend bool operator==(FinAlgebra const& a, FinAlgebra const& b) {
    return a.size_ == b.size_ && a.zero_ == b.zero_ && a.one_ == b.one_ &&
           a.tables_ == b.tables_;
  }

  struct Trusted {};
  FinAlgebra(Trusted, int size, std::array<Table, 4> tables, int zero,
             int one, std::string label = {});

 private:
  int size_ = 0;
  std::array<Table, 4> tables_;
  int zero_ = 0;
  int one_ = 0;
  std::string label_;
  std::vector<std::string> names_;
};

/// Throws AxiomViolation naming the first violated axiom and a witness.
void validate_algebra(FinAlgebra const& a);

/// Componentwise algebra on A x B; element (a, b) has index a * |B| + b.
FinAlgebra product(FinAlgebra const& a, FinAlgebra const& b);

/// P\L_n^k with coordinates in lexicographic order (first coordinate most
/// significant). k = 0 gives the one-element algebra.
FinAlgebra chain_power(int n, int k);

/// A subalgebra with the indices of its elements in the ambient algebra.
struct SubalgebraOf {
  FinAlgebra algebra;
  std::vector<int> embedding;  // sorted; embedding[i] = ambient index
};

/// Smallest subuniverse containing gens and the constants.
std::vector<int> subuniverse_generated(FinAlgebra const& a,
                                       std::span<int const> gens);

/// The subalgebra on a sorted subuniverse.
SubalgebraOf restrict_to(FinAlgebra const& a, std::vector<int> carrier);

SubalgebraOf subalgebra_generated(FinAlgebra const& a,
                                  std::span<int const> gens);

/// Every subuniverse of A, each as a sorted index list, in increasing
/// (size, lexicographic) order.
std::vector<std::vector<int>> all_subuniverses(FinAlgebra const& a);

/// A homomorphism, stored as the image array of the source carrier.
struct Hom {
  std::vector<int> map;

  /// Validates that map is a homomorphism source -> target.
  static Hom checked(FinAlgebra const& source, FinAlgebra const& target,
                     std::vector<int> map);

  bool injective() const;
  bool surjective(int target_size) const;

  friend auto operator<=>(Hom const&, Hom const&) = default;
};

bool is_homomorphism(FinAlgebra const& source, FinAlgebra const& target,
                     std::span<int const> map);

Hom compose(Hom const& second, Hom const& first);  // second o first

/// Index of a coordinate tuple inside chain_power(n, k).
int power_index(int n, std::span<int const> coords);
std::vector<int> power_coords(int n, int k, int index);

}  // namespace pmv
