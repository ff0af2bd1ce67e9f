#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace pmv {

/// The four binary operations of the signature.
enum class Op { meet, join, oplus, odot };

inline constexpr std::array<Op, 4> kAllOps = {Op::meet, Op::join, Op::oplus,
                                              Op::odot};

std::string_view op_name(Op op);
std::string_view op_symbol(Op op);

/// Raw operation on numerators of the chain {0, 1/n, ..., 1}.
constexpr int apply_op(Op op, int x, int y, int n) noexcept {
  switch (op) {
    case Op::meet: return x < y ? x : y;
    case Op::join: return x < y ? y : x;
    case Op::oplus: return x + y < n ? x + y : n;
    case Op::odot: return x + y > n ? x + y - n : 0;
  }
  return 0;
}

/// Element num/n of a chain, stored as its numerator.
struct ChainElem {
  int num = 0;

  friend constexpr auto operator<=>(ChainElem, ChainElem) = default;
};

/// Renders num/n the way the sequences are written: "0", "1" or "i/n"
/// (unreduced, so 2/4 stays 2/4).
std::string format_value(int num, int n);

/// The (n+1)-element positive MV-chain.
class Chain {
 public:
  explicit Chain(int n);

  int n() const noexcept { return n_; }
  int size() const noexcept { return n_ + 1; }

  ChainElem zero() const noexcept { return {0}; }
  ChainElem one() const noexcept { return {n_}; }

  bool contains(ChainElem x) const noexcept { return 0 <= x.num && x.num <= n_; }

  /// Throws InvalidElement unless x belongs to the chain.
  ChainElem check(ChainElem x) const;

  ChainElem apply(Op op, ChainElem x, ChainElem y) const;

  /// 1 if d <= x, else 0.
  ChainElem tau(ChainElem d, ChainElem x) const;

  std::string format(ChainElem x) const { return format_value(x.num, n_); }

  friend bool operator==(Chain const&, Chain const&) = default;

 private:
  int n_;
};

/// A subuniverse of the chain, kept as its sorted numerator list.
struct Subalgebra {
  int n = 1;
  std::vector<int> carrier;

  /// Number k such that the subalgebra is isomorphic to the (k+1)-chain.
  int k() const noexcept { return static_cast<int>(carrier.size()) - 1; }
  bool contains(int num) const;

  friend auto operator<=>(Subalgebra const&, Subalgebra const&) = default;
};

/// The subalgebra {0, l, 2l, ..., n} where n = k * l.
Subalgebra divisor_subalgebra(int n, int k);

/// One subalgebra per divisor of n, ordered by increasing size.
std::vector<Subalgebra> chain_subalgebras(Chain const& c);

/// Brute-force scan of all subsets containing 0 and 1 that are closed under
/// the four operations. Refuses n > 12.
std::vector<Subalgebra> subalgebra_oracle(Chain const& c);

/// True if the given numerator set is closed under the four operations.
bool is_closed_subset(int n, std::vector<int> const& carrier);

}  // namespace pmv
