#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmv/order_subalgebras.hpp"

namespace pmv {

enum class SquareKind { product, diagonal, sub_of_leq, sub_of_geq };
std::string_view kind_name(SquareKind k);

/// Throws InvalidInput if r is not a subalgebra of the square.
SquareKind classify_square_subalgebra(BinRel const& r);

/// Smallest subalgebra of the square containing seed.
BinRel close_relation(BinRel seed);

/// Subalgebras of the square contained in the order, by testing every
/// subset of the order. n <= 4.
std::vector<BinRel> square_subalgebras_by_subset_scan(int n);
/// Same set, grown by adding one pair at a time and closing. n <= 8.
std::vector<BinRel> square_subalgebras_by_closure(int n);
/// Subset scan up to n = 4, closure up to n = 6, SizeLimitExceeded above.
/// Sorted by (size, pairs).
std::vector<BinRel> square_subalgebras_oracle(int n);

/// One bullet of a published not-good list: the sequences it names and the
/// operation it cites as leaving the union.
struct ReferenceBullet {
  std::vector<GoodSeq> sequences;
  Op op;
  std::pair<int, int> left;
  std::pair<int, int> right;
  std::pair<int, int> result;
};

/// The reference listing for a given n: Step 1 candidates, the good ones
/// and the explanations for the rest. Only n = 4 is available.
struct ReferenceListing {
  int n = 4;
  std::vector<GoodSeq> candidates;
  std::vector<GoodSeq> good;
  std::vector<ReferenceBullet> bullets;
};
std::optional<ReferenceListing> reference_listing(int n);

/// Compares corner mode, full mode and the oracle, and checks the reference
/// listing when one exists.
struct OracleDiff {
  int n = 1;
  int candidate_count = 0;
  std::vector<GoodSeq> corner;
  std::vector<GoodSeq> full;
  std::vector<GoodSeq> oracle;
  bool agree = false;
  int discrepancy_count = 0;
  std::vector<std::string> lines;
};
OracleDiff oracle_diff(int n);

}  // namespace pmv
