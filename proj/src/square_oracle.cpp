#include "pmv/square_oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pmv/error.hpp"

namespace pmv {

std::string_view kind_name(SquareKind k) {
  switch (k) {
    case SquareKind::product: return "product";
    case SquareKind::diagonal: return "diagonal";
    case SquareKind::sub_of_leq: return "sub_of_leq";
    case SquareKind::sub_of_geq: return "sub_of_geq";
  }
  return "?";
}

SquareKind classify_square_subalgebra(BinRel const& r) {
  if (!r.is_subalgebra()) {
    throw InvalidInput("relation is not a subalgebra of the square");
  }
  int const n = r.n();
  Subalgebra const s1{n, r.first_projection()};
  Subalgebra const s2{n, r.second_projection()};
  if (r == BinRel::product(s1, s2)) return SquareKind::product;
  if (s1 == s2 && r == BinRel::diagonal(s1)) return SquareKind::diagonal;
  if (r.subset_of(BinRel::leq(n))) return SquareKind::sub_of_leq;
  if (r.subset_of(BinRel::geq(n))) return SquareKind::sub_of_geq;
  throw InternalConsistencyError(
      "subalgebra is neither a product nor inside an order");
}

BinRel close_relation(BinRel seed) {
  int const n = seed.n();
  seed.insert(0, 0);
  seed.insert(n, n);
  auto ps = seed.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Op op : kAllOps) {
        int const x = apply_op(op, ps[i].first, ps[j].first, n);
        int const y = apply_op(op, ps[i].second, ps[j].second, n);
        if (!seed.contains(x, y)) {
          seed.insert(x, y);
          ps.emplace_back(x, y);
        }
      }
    }
  }
  return seed;
}

namespace {

void sort_relations(std::vector<BinRel>& rs) {
  std::sort(rs.begin(), rs.end(), [](BinRel const& a, BinRel const& b) {
    auto const ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a.pairs() < b.pairs();
  });
}

}  // namespace

std::vector<BinRel> square_subalgebras_by_subset_scan(int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  if (n > 4) throw SizeLimitExceeded("subset scan is limited to n <= 4");
  std::vector<std::pair<int, int>> free;
  for (auto [x, y] : BinRel::leq(n).pairs()) {
    if (!(x == 0 && y == 0) && !(x == n && y == n)) free.emplace_back(x, y);
  }
  std::vector<BinRel> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << free.size()); ++s) {
    BinRel r(n);
    r.insert(0, 0);
    r.insert(n, n);
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (s >> i & 1) r.insert(free[i].first, free[i].second);
    }
    if (r.is_subalgebra()) out.push_back(std::move(r));
  }
  sort_relations(out);
  return out;
}

std::vector<BinRel> square_subalgebras_by_closure(int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  if (n > 8) throw SizeLimitExceeded("closure enumeration is limited to n <= 8");
  auto const order = BinRel::leq(n).pairs();
  std::set<BinRel> seen;
  std::deque<BinRel> queue;
  BinRel start = close_relation(BinRel(n));
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    BinRel r = std::move(queue.front());
    queue.pop_front();
    for (auto [x, y] : order) {
      if (r.contains(x, y)) continue;
      BinRel next = r;
      next.insert(x, y);
      next = close_relation(std::move(next));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<BinRel> out(seen.begin(), seen.end());
  sort_relations(out);
  return out;
}

std::vector<BinRel> square_subalgebras_oracle(int n) {
  if (n <= 4) return square_subalgebras_by_subset_scan(n);
  if (n <= 6) return square_subalgebras_by_closure(n);
  throw SizeLimitExceeded("square subalgebra oracle is limited to n <= 6");
}

std::optional<ReferenceListing> reference_listing(int n) {
  if (n != 4) return std::nullopt;
  auto seq = [](std::vector<int> y) { return GoodSeq{4, std::move(y)}; };
  ReferenceListing ref;
  ref.candidates = {
      seq({4, 4, 4}), seq({3, 4, 4}), seq({3, 3, 4}), seq({3, 3, 3}),
      seq({2, 4, 4}), seq({2, 3, 4}), seq({2, 3, 3}), seq({2, 2, 4}),
      seq({2, 2, 3}), seq({1, 4, 4}), seq({1, 3, 4}), seq({1, 3, 3}),
      seq({1, 2, 4}), seq({1, 2, 3})};
  ref.good = {seq({4, 4, 4}), seq({3, 4, 4}), seq({3, 3, 4}), seq({2, 4, 4}),
              seq({2, 3, 4}), seq({2, 2, 4}), seq({1, 2, 3})};
  ref.bullets = {
      {{seq({3, 3, 3}), seq({2, 3, 3})}, Op::odot, {3, 3}, {3, 3}, {2, 2}},
      {{seq({2, 2, 3})}, Op::odot, {2, 2}, {3, 3}, {1, 1}},
      {{seq({1, 4, 4}), seq({1, 3, 4}), seq({1, 3, 3})},
       Op::oplus, {1, 1}, {1, 1}, {2, 2}},
      {{seq({2, 2, 4})}, Op::oplus, {1, 1}, {2, 2}, {3, 3}},
  };
  return ref;
}

namespace {

std::string point(std::pair<int, int> p, int n) {
  return "(" + format_value(p.first, n) + "," + format_value(p.second, n) +
         ")";
}

std::string cited(ReferenceBullet const& b, int n) {
  return point(b.left, n) + std::string(op_symbol(b.op)) + point(b.right, n) +
         " = " + point(b.result, n);
}

// The cited operation refutes s: both operands lie in the union of s and
// the result does not.
bool refutes(ReferenceBullet const& b, GoodSeq const& s) {
  int const n = s.n;
  return apply_op(b.op, b.left.first, b.right.first, n) == b.result.first &&
         apply_op(b.op, b.left.second, b.right.second, n) == b.result.second &&
         in_union(s, b.left.first, b.left.second) &&
         in_union(s, b.right.first, b.right.second) &&
         !in_union(s, b.result.first, b.result.second);
}

std::string seq_list(std::vector<GoodSeq> const& ss) {
  std::string out;
  for (auto const& s : ss) out += (out.empty() ? "" : " ") + s.to_string();
  return out;
}

}  // namespace

OracleDiff oracle_diff(int n) {
  OracleDiff d;
  d.n = n;
  auto const candidates = candidate_sequences(n);
  d.candidate_count = static_cast<int>(candidates.size());
  for (auto const& s : candidates) {
    if (is_good_sequence(s, CheckMode::corner).good) d.corner.push_back(s);
    if (is_good_sequence(s, CheckMode::full).good) d.full.push_back(s);
  }
  auto const tri = BinRel::triangle(n);
  for (auto const& r : square_subalgebras_oracle(n)) {
    if (tri.subset_of(r)) d.oracle.push_back(rel_to_seq(r));
  }
  std::sort(d.oracle.begin(), d.oracle.end(), std::greater<>());
  d.agree = d.corner == d.full && d.full == d.oracle;

  auto& out = d.lines;
  auto discrepancy = [&d](std::string text) {
    ++d.discrepancy_count;
    d.lines.push_back("DISCREPANCY " + std::move(text));
  };
  out.push_back("n = " + std::to_string(n) + ": " +
                std::to_string(d.candidate_count) + " candidate sequences");
  out.push_back("corner mode: " + std::to_string(d.corner.size()) + " good");
  out.push_back("full mode:   " + std::to_string(d.full.size()) + " good");
  out.push_back("oracle:      " + std::to_string(d.oracle.size()) +
                " subalgebras between triangle and order");
  if (d.agree) {
    out.push_back("corner mode, full mode and oracle agree");
  } else {
    discrepancy("corner mode, full mode and oracle disagree");
    out.push_back("  corner: " + seq_list(d.corner));
    out.push_back("  full:   " + seq_list(d.full));
    out.push_back("  oracle: " + seq_list(d.oracle));
  }
  for (auto const& s : d.full) out.push_back("good     " + s.to_string());
  for (auto const& s : candidates) {
    auto const rep = is_good_sequence(s, CheckMode::full);
    if (!rep.good) {
      out.push_back("not good " + s.to_string() + ": " +
                    rep.witness->describe(n) + " outside the union");
    }
  }

  auto const ref = reference_listing(n);
  if (!ref) {
    out.push_back("no reference listing for n = " + std::to_string(n));
    return d;
  }
  out.push_back("reference listing for n = " + std::to_string(n) + ":");
  if (ref->candidates == candidates) {
    out.push_back("  candidate list matches (" +
                  std::to_string(candidates.size()) + " sequences)");
  } else {
    discrepancy("reference candidate list differs: " +
                seq_list(ref->candidates));
  }
  if (ref->good == d.full) {
    out.push_back("  good list matches (" + std::to_string(d.full.size()) +
                  " sequences)");
  } else {
    discrepancy("reference good list differs: " + seq_list(ref->good));
  }

  std::set<GoodSeq> named;
  for (std::size_t i = 0; i < ref->bullets.size(); ++i) {
    auto const& b = ref->bullets[i];
    std::string const tag = "bullet " + std::to_string(i + 1);
    for (auto const& s : b.sequences) {
      named.insert(s);
      bool const good = is_good_sequence(s, CheckMode::full).good;
      bool const valid = refutes(b, s);
      if (!good && valid) {
        out.push_back("  " + tag + ": " + s.to_string() +
                      " not good, cited " + cited(b, n) + " confirmed");
        continue;
      }
      discrepancy("reference listing " + tag + " names " + s.to_string() +
                  " as not good via " + cited(b, n));
      if (good) {
        bool const listed = std::find(ref->good.begin(), ref->good.end(), s) !=
                            ref->good.end();
        out.push_back("  computed: " + s.to_string() + " is good" +
                      (listed ? " and also appears in the reference good list"
                              : ""));
      }
      if (!valid) {
        out.push_back("  the cited operation does not leave the union of " +
                      s.to_string());
      }
      for (auto const& other : candidates) {
        if (other == s || !refutes(b, other)) continue;
        auto const rep = is_good_sequence(other, CheckMode::full);
        out.push_back("  the cited operation refutes " + other.to_string() +
                      ", which is " + (rep.good ? "good" : "not good") +
                      (rep.good ? "" : ": " + rep.witness->describe(n)));
      }
    }
  }
  for (auto const& s : candidates) {
    if (is_good_sequence(s, CheckMode::full).good || named.count(s)) continue;
    discrepancy(s.to_string() +
                " is not good but no reference bullet names it: " +
                is_good_sequence(s, CheckMode::full).witness->describe(n));
  }
  return d;
}

}  // namespace pmv
