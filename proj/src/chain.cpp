#include "pmv/chain.hpp"

#include <algorithm>
#include <numeric>

#include "pmv/error.hpp"

namespace pmv {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::meet: return "meet";
    case Op::join: return "join";
    case Op::oplus: return "oplus";
    case Op::odot: return "odot";
  }
  return "?";
}

std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::meet: return "∧";
    case Op::join: return "∨";
    case Op::oplus: return "⊕";
    case Op::odot: return "⊙";
  }
  return "?";
}

std::string format_value(int num, int n) {
  if (num == 0) return "0";
  if (num == n) return "1";
  return std::to_string(num) + "/" + std::to_string(n);
}

Chain::Chain(int n) : n_(n) {
  if (n < 1) throw InvalidInput("chain parameter n must be >= 1, got " +
                                std::to_string(n));
}

ChainElem Chain::check(ChainElem x) const {
  if (!contains(x)) {
    throw InvalidElement("numerator " + std::to_string(x.num) +
                         " outside 0.." + std::to_string(n_));
  }
  return x;
}

ChainElem Chain::apply(Op op, ChainElem x, ChainElem y) const {
  check(x);
  check(y);
  return {apply_op(op, x.num, y.num, n_)};
}

ChainElem Chain::tau(ChainElem d, ChainElem x) const {
  check(d);
  check(x);
  return d.num <= x.num ? one() : zero();
}

bool Subalgebra::contains(int num) const {
  return std::binary_search(carrier.begin(), carrier.end(), num);
}

Subalgebra divisor_subalgebra(int n, int k) {
  if (k < 1 || n % k != 0) {
    throw InvalidInput(std::to_string(k) + " does not divide " +
                       std::to_string(n));
  }
  int const step = n / k;
  Subalgebra s{n, {}};
  for (int v = 0; v <= n; v += step) s.carrier.push_back(v);
  return s;
}

std::vector<Subalgebra> chain_subalgebras(Chain const& c) {
  std::vector<Subalgebra> out;
  for (int k = 1; k <= c.n(); ++k) {
    if (c.n() % k == 0) out.push_back(divisor_subalgebra(c.n(), k));
  }
  return out;
}

bool is_closed_subset(int n, std::vector<int> const& carrier) {
  std::vector<bool> in(n + 1, false);
  for (int v : carrier) in[v] = true;
  for (int x : carrier) {
    for (int y : carrier) {
      for (Op op : kAllOps) {
        if (!in[apply_op(op, x, y, n)]) return false;
      }
    }
  }
  return true;
}

std::vector<Subalgebra> subalgebra_oracle(Chain const& c) {
  int const n = c.n();
  if (n > 12) {
    throw SizeLimitExceeded("subalgebra_oracle scans 2^(n-1) subsets; n = " +
                            std::to_string(n) + " exceeds the limit 12");
  }
  std::vector<Subalgebra> out;
  // Bit i-1 of mask selects the inner element i, 1 <= i <= n-1.
  unsigned const inner = static_cast<unsigned>(n - 1);
  for (unsigned mask = 0; mask < (1u << inner); ++mask) {
    Subalgebra s{n, {0}};
    for (unsigned i = 0; i < inner; ++i) {
      if (mask & (1u << i)) s.carrier.push_back(static_cast<int>(i) + 1);
    }
    s.carrier.push_back(n);
    if (is_closed_subset(n, s.carrier)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.carrier.size() != b.carrier.size()
               ? a.carrier.size() < b.carrier.size()
               : a.carrier < b.carrier;
  });
  return out;
}

}  // namespace pmv
