#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmv/chain.hpp"

namespace pmv {

/// A binary relation on the chain {0, ..., n}, stored as an (n+1)^2 grid.
class BinRel {
 public:
  explicit BinRel(int n);

  static BinRel leq(int n);
  static BinRel geq(int n);
  /// {(x, y) | x = 0 or y = 1}.
  static BinRel triangle(int n);
  static BinRel full(int n);
  static BinRel diagonal(Subalgebra const& s);
  static BinRel product(Subalgebra const& first, Subalgebra const& second);
  static BinRel from_pairs(int n, std::vector<std::pair<int, int>> const& ps);

  int n() const noexcept { return n_; }
  bool contains(int x, int y) const { return cells_[index(x, y)] != 0; }
  void insert(int x, int y) { cells_[index(x, y)] = 1; }
  void erase(int x, int y) { cells_[index(x, y)] = 0; }
  int count() const;
  std::vector<std::pair<int, int>> pairs() const;

  bool subset_of(BinRel const& other) const;
  BinRel intersect(BinRel const& other) const;
  BinRel converse() const;

  /// Sorted numerators of the first / second projection.
  std::vector<int> first_projection() const;
  std::vector<int> second_projection() const;

  /// Contains (0,0), (1,1) and is closed under the componentwise operations.
  bool is_subalgebra() const;

  friend auto operator<=>(BinRel const&, BinRel const&) = default;

 private:
  std::size_t index(int x, int y) const;

  int n_;
  std::vector<char> cells_;
};

/// The sequence (y_1, ..., y_{n-1}) encoding the union of the rectangles
/// C_{(i/n, y_i)}; y_0 = 0 and y_n = 1 are implicit.
struct GoodSeq {
  int n = 1;
  std::vector<int> y;

  /// Throws InvalidInput unless y is nondecreasing with i <= y_i <= n.
  void validate() const;
  /// y_i for 0 <= i <= n, including the implicit endpoints.
  int at(int i) const { return i == 0 ? 0 : i == n ? n : y[i - 1]; }
  /// "[2/4,3/4,1]".
  std::string to_string() const;
  static GoodSeq parse(int n, std::string const& text);

  friend auto operator<=>(GoodSeq const&, GoodSeq const&) = default;
};

/// A product S1 x S2 of subalgebras of the chain.
struct SubalgebraSquare {
  Subalgebra first;
  Subalgebra second;
};

/// {(x', y') in S | x' <= x and y <= y'}. Requires x <= y and (x, y) in S.
BinRel rectangle(int n, SubalgebraSquare const& s, int x, int y);
BinRel rectangle(int n, int x, int y);

/// True if (x, y) lies in the union of rectangles encoded by seq.
bool in_union(GoodSeq const& seq, int x, int y);

enum class CheckMode { corner, full };

struct GoodnessWitness {
  int i = 0;  // index of the first corner element
  int j = 0;  // index of the second corner element
  Op op = Op::oplus;
  std::pair<int, int> left;
  std::pair<int, int> right;
  std::pair<int, int> result;

  /// "(1/4,1/4)⊕(2/4,2/4) = (3/4,3/4)".
  std::string describe(int n) const;
};

struct GoodnessReport {
  bool good = true;
  std::optional<GoodnessWitness> witness;
};

/// Decides whether the union encoded by seq is a subalgebra of the square.
/// corner mode checks index pairs with y_i < y_{i+1}; full mode checks all
/// pairs in {1, ..., n-1}. Pairs are visited in order (i <= j), odot before
/// oplus; the first failure is reported.
GoodnessReport is_good_sequence(GoodSeq const& seq, CheckMode mode);

/// Every nondecreasing sequence with i/n <= y_i, in descending lexicographic
/// order (so all-ones comes first and y_i = i/n last).
std::vector<GoodSeq> candidate_sequences(int n);

/// The union of rectangles encoded by seq.
BinRel seq_to_rel(GoodSeq const& seq);
/// Inverse of seq_to_rel on subalgebras between the triangle and the order.
GoodSeq rel_to_seq(BinRel const& r);

/// The lattice of relations between the triangle and the order.
struct RelLattice {
  int n = 1;
  std::vector<GoodSeq> elements;          // descending lexicographic order
  std::vector<std::pair<int, int>> covers;  // (lower, upper) Hasse edges
  std::vector<bool> meet_irreducible;
  int bottom = 0;
  int top = 0;

  int size() const noexcept { return static_cast<int>(elements.size()); }
  /// elements[a] is below elements[b]: relation a is contained in b.
  bool leq(int a, int b) const;
  std::optional<int> find(GoodSeq const& s) const;
  std::vector<int> upper_covers(int a) const;
};

/// Filters the candidates by the corner check and orders them by containment.
RelLattice compute_Sn(int n);

/// Cached compute_Sn, safe to call concurrently.
RelLattice const& relation_lattice(int n);

/// Elements with exactly one upper cover, together with the top element.
std::vector<GoodSeq> meet_irreducibles(RelLattice const& l);

/// Graphviz rendering of the Hasse diagram.
std::string to_dot(RelLattice const& l);

}  // namespace pmv
