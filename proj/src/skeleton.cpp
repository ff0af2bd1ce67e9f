#include "pmv/skeleton.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "pmv/duality.hpp"
#include "pmv/homs.hpp"

namespace pmv {

Poset::Poset(int size)
    : size(size), order(static_cast<std::size_t>(size) * size, 0) {
  for (int i = 0; i < size; ++i) set(i, i);
}

void Poset::validate() const {
  for (int i = 0; i < size; ++i) {
    if (!leq(i, i)) throw InvalidInput("order not reflexive");
    for (int j = 0; j < size; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) {
        throw InvalidInput("order not antisymmetric");
      }
      for (int k = 0; k < size; ++k) {
        if (leq(i, j) && leq(j, k) && !leq(i, k)) {
          throw InvalidInput("order not transitive");
        }
      }
    }
  }
}

std::vector<std::pair<int, int>> Poset::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (leq(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : pairs()) {
    if (i == j) continue;
    bool cover = true;
    for (int k = 0; k < size && cover; ++k) {
      if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
    }
    if (cover) out.emplace_back(i, j);
  }
  return out;
}

std::optional<std::vector<int>> find_poset_isomorphism(Poset const& a,
                                                       Poset const& b) {
  if (a.size != b.size) return std::nullopt;
  std::vector<int> perm(a.size);
  for (int i = 0; i < a.size; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < a.size && ok; ++i)
      for (int j = 0; j < a.size && ok; ++j)
        ok = a.leq(i, j) == b.leq(perm[i], perm[j]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool is_distributive_lattice(FinAlgebra const& a) {
  return a.table(Op::oplus) == a.table(Op::join) &&
         a.table(Op::odot) == a.table(Op::meet);
}

FinAlgebra lattice_from_tables(int size, FinAlgebra::Table meet,
                               FinAlgebra::Table join, int zero, int one,
                               std::string label) {
  std::array<FinAlgebra::Table, 4> t{meet, join, join, meet};
  return FinAlgebra::from_tables(size, std::move(t), zero, one,
                                 std::move(label));
}

namespace {

FinAlgebra lattice_on_masks(std::vector<std::uint32_t> masks,
                            std::string label) {
  std::sort(masks.begin(), masks.end(), [](auto x, auto y) {
    return std::pair(std::popcount(x), x) < std::pair(std::popcount(y), y);
  });
  int const m = static_cast<int>(masks.size());
  auto idx = [&masks](std::uint32_t v) {
    return static_cast<int>(std::find(masks.begin(), masks.end(), v) -
                            masks.begin());
  };
  FinAlgebra::Table meet(m * m), join(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      meet[i * m + j] = idx(masks[i] & masks[j]);
      join[i * m + j] = idx(masks[i] | masks[j]);
    }
  }
  return FinAlgebra(FinAlgebra::Trusted{}, m, {meet, join, join, meet}, 0,
                    m - 1, std::move(label));
}

std::vector<std::uint32_t> downsets(std::vector<std::uint32_t> const& below,
                                    std::size_t limit) {
  int const k = static_cast<int>(below.size());
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if ((s >> i & 1) && (below[i] & ~s)) ok = false;
    }
    if (ok) {
      out.push_back(s);
      if (out.size() > limit) break;
    }
  }
  return out;
}

}  // namespace

FinAlgebra downset_lattice(Poset const& p) {
  p.validate();
  if (p.size > 20) throw SizeLimitExceeded("poset too large for downsets");
  std::vector<std::uint32_t> below(p.size, 0);
  for (auto [i, j] : p.pairs()) {
    if (i != j) below[j] |= std::uint32_t{1} << i;
  }
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << p.size); ++s) {
    bool ok = true;
    for (int i = 0; i < p.size && ok; ++i) {
      if ((s >> i & 1) && (below[i] & ~s)) ok = false;
    }
    if (ok) masks.push_back(s);
  }
  return lattice_on_masks(std::move(masks), "O(P)");
}

FinAlgebra chain_lattice(int size) {
  if (size < 1) throw InvalidInput("chain lattice needs size >= 1");
  Poset p(size - 1);
  for (int i = 0; i < size - 1; ++i)
    for (int j = i; j < size - 1; ++j) p.set(i, j);
  auto l = downset_lattice(p);
  l.set_label("C" + std::to_string(size));
  return l;
}

FinAlgebra boolean_lattice(int atoms) {
  if (atoms < 0 || atoms > 12) throw InvalidInput("atoms must be in 0..12");
  auto l = downset_lattice(Poset(atoms));
  l.set_label("B" + std::to_string(atoms));
  return l;
}

bool is_complemented(FinAlgebra const& l) {
  for (int a = 0; a < l.size(); ++a) {
    bool found = false;
    for (int b = 0; b < l.size() && !found; ++b) {
      found = l.apply(Op::meet, a, b) == l.zero() &&
              l.apply(Op::join, a, b) == l.one();
    }
    if (!found) return false;
  }
  return true;
}

int atom_count(FinAlgebra const& l) {
  int count = 0;
  for (int a = 0; a < l.size(); ++a) {
    if (a == l.zero()) continue;
    bool atom = true;
    for (int b = 0; b < l.size() && atom; ++b) {
      if (b != a && b != l.zero() && l.leq(b, a)) atom = false;
    }
    if (atom) ++count;
  }
  return count;
}

std::vector<FinAlgebra> enumerate_distributive_lattices(int max_size) {
  if (max_size < 1) return {};
  if (max_size > 16) throw SizeLimitExceeded("lattice enumeration needs <= 16");
  std::vector<FinAlgebra> reps;
  // Posets are grown one maximal point at a time; below[i] lists the points
  // under point i and is always a down-set of the earlier points.
  std::vector<std::uint32_t> below;
  auto rec = [&](auto&& self) -> void {
    auto const ds = downsets(below, static_cast<std::size_t>(max_size));
    if (ds.size() > static_cast<std::size_t>(max_size)) return;
    auto l = lattice_on_masks(ds, {});
    bool fresh = true;
    for (auto const& r : reps) {
      if (r.size() == l.size() && find_isomorphism(r, l)) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      l.set_label("D" + std::to_string(reps.size()));
      reps.push_back(std::move(l));
    }
    if (below.size() >= 31) return;
    for (std::uint32_t d : ds) {
      below.push_back(d);
      self(self);
      below.pop_back();
    }
  };
  rec(rec);
  std::stable_sort(reps.begin(), reps.end(),
                   [](auto const& a, auto const& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < reps.size(); ++i) {
    reps[i].set_label("D" + std::to_string(reps[i].size()) + "_" +
                      std::to_string(i));
  }
  return reps;
}

Skeleton skeleton(FinAlgebra const& a) {
  std::vector<int> inc;
  for (int x = 0; x < a.size(); ++x) {
    if (a.apply(Op::oplus, x, x) == x) inc.push_back(x);
  }
  int const m = static_cast<int>(inc.size());
  auto local = [&inc](int x) {
    return static_cast<int>(std::lower_bound(inc.begin(), inc.end(), x) -
                            inc.begin());
  };
  FinAlgebra::Table meet(m * m), join(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      meet[i * m + j] = local(a.apply(Op::meet, inc[i], inc[j]));
      join[i * m + j] = local(a.apply(Op::join, inc[i], inc[j]));
    }
  }
  FinAlgebra l(FinAlgebra::Trusted{}, m, {meet, join, join, meet},
               local(a.zero()), local(a.one()), "S(" + a.label() + ")");
  if (!a.names().empty()) {
    std::vector<std::string> names;
    for (int x : inc) names.push_back(a.name(x));
    l.set_names(std::move(names));
  }
  return {std::move(l), std::move(inc)};
}

Hom skeleton_functor_on_homs(FinAlgebra const& source,
                             FinAlgebra const& target, Hom const& h) {
  auto const s = skeleton(source);
  auto const t = skeleton(target);
  std::vector<int> map;
  for (int x : s.inclusion) {
    int const y = h.map.at(x);
    auto it = std::lower_bound(t.inclusion.begin(), t.inclusion.end(), y);
    if (it == t.inclusion.end() || *it != y) {
      throw InternalConsistencyError(
          "homomorphism sent an idempotent outside the skeleton");
    }
    map.push_back(static_cast<int>(it - t.inclusion.begin()));
  }
  return Hom{std::move(map)};
}

PriestleyDual priestley_dual(FinAlgebra const& l) {
  if (!is_distributive_lattice(l)) {
    throw InvalidInput("priestley_dual needs oplus = join and odot = meet");
  }
  auto d = dual_space(l, 1);
  Poset p(d.space.size());
  for (auto [u, v] : d.space.pairs(d.space.leq_index())) p.set(u, v);
  return {std::move(p), std::move(d.points)};
}

std::vector<std::vector<int>> monotone_maps(Poset const& p, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(p.size);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == p.size) {
      out.push_back(f);
      return;
    }
    for (int v = 0; v <= n; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (p.leq(j, i) && f[j] > v) ok = false;
        if (p.leq(i, j) && v > f[j]) ok = false;
      }
      if (!ok) continue;
      f[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

FinAlgebra pointwise_algebra(std::vector<std::vector<int>> const& maps, int n,
                             std::string label) {
  int const m = static_cast<int>(maps.size());
  int const width = maps.empty() ? 0 : static_cast<int>(maps[0].size());
  if (width == 0) {
    auto t = FinAlgebra::trivial();
    t.set_label(std::move(label));
    return t;
  }
  auto idx = [&maps](std::vector<int> const& f) {
    auto it = std::lower_bound(maps.begin(), maps.end(), f);
    if (it == maps.end() || *it != f) {
      throw InternalConsistencyError("pointwise operation left the carrier");
    }
    return static_cast<int>(it - maps.begin());
  };
  std::array<FinAlgebra::Table, 4> tables;
  std::vector<int> f(width);
  for (Op op : kAllOps) {
    auto& t = tables[static_cast<std::size_t>(op)];
    t.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        for (int v = 0; v < width; ++v) {
          f[v] = apply_op(op, maps[i][v], maps[j][v], n);
        }
        t[i * m + j] = idx(f);
      }
    }
  }
  FinAlgebra a(FinAlgebra::Trusted{}, m, std::move(tables),
               idx(std::vector<int>(width, 0)), idx(std::vector<int>(width, n)),
               std::move(label));
  std::vector<std::string> names;
  for (auto const& g : maps) {
    std::string s = "(";
    for (int v = 0; v < width; ++v) {
      if (v) s += ",";
      s += format_value(g[v], n);
    }
    names.push_back(s + ")");
  }
  a.set_names(std::move(names));
  return a;
}

}  // namespace

PriestleyPower priestley_power(int n, FinAlgebra const& l) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  auto dual = priestley_dual(l);
  auto maps = monotone_maps(dual.poset, n);
  auto alg = pointwise_algebra(
      maps, n, "PL" + std::to_string(n) + "[" + l.label() + "]");
  return {std::move(alg), std::move(maps), std::move(dual)};
}

FinAlgebra boolean_power(int n, int k) {
  if (k < 0) throw InvalidInput("atom count must be >= 0");
  auto a = chain_power(n, k);
  a.set_label("PL" + std::to_string(n) + "[B" + std::to_string(k) + "]");
  return a;
}

SkeletonUnit skeleton_unit(FinAlgebra const& a, int n, SearchBudget budget) {
  auto emb = pmv_membership(a, n, budget);
  if (!emb) {
    throw NotAMember(a.label() + " is not in PMV_" + std::to_string(n));
  }
  std::map<std::vector<int>, int> by_coords;
  for (int x = 0; x < a.size(); ++x) by_coords[emb->coordinates[x]] = x;

  auto sk = skeleton(a);
  auto power = priestley_power(n, sk.lattice);
  std::vector<int> map(a.size());
  for (int x = 0; x < a.size(); ++x) {
    // Skeleton index of tau_d(x) for d = 1..n.
    std::vector<int> tau(n + 1, 0);
    for (int d = 1; d <= n; ++d) {
      auto c = emb->coordinates[x];
      for (int& v : c) v = d <= v ? n : 0;
      auto it = by_coords.find(c);
      if (it == by_coords.end()) {
        throw InternalConsistencyError("tau_" + std::to_string(d) +
                                       " left the algebra");
      }
      auto pos = std::lower_bound(sk.inclusion.begin(), sk.inclusion.end(),
                                  it->second);
      tau[d] = static_cast<int>(pos - sk.inclusion.begin());
    }
    std::vector<int> f(power.dual.points.size());
    for (std::size_t p = 0; p < f.size(); ++p) {
      int best = 0;
      for (int d = 1; d <= n; ++d) {
        if (power.dual.points[p].map[tau[d]] == 1) best = d;
      }
      f[p] = best;
    }
    auto it = std::lower_bound(power.maps.begin(), power.maps.end(), f);
    if (it == power.maps.end() || *it != f) {
      throw InternalConsistencyError("unit image is not order-preserving");
    }
    map[x] = static_cast<int>(it - power.maps.begin());
  }
  if (!is_homomorphism(a, power.algebra, map)) {
    throw InternalConsistencyError("skeleton unit is not a homomorphism");
  }
  SkeletonUnit out{Hom{std::move(map)}, std::move(power), std::move(sk), false};
  out.injective = out.map.injective();
  if (!out.injective) {
    throw InternalConsistencyError("skeleton unit is not injective");
  }
  return out;
}

AdjunctionReport adjunction_check(FinAlgebra const& a, FinAlgebra const& l,
                                  int n, SearchBudget budget) {
  if (!is_distributive_lattice(l)) {
    throw InvalidInput("adjunction_check needs a distributive lattice");
  }
  auto const unit = skeleton_unit(a, n, budget);
  auto const power = priestley_power(n, l);
  auto const& sk = unit.skeleton;
  auto const left = hom_enumerate(a, power.algebra, budget);
  auto const right = hom_enumerate(sk.lattice, l, budget);

  AdjunctionReport rep;
  rep.power_homs = static_cast<int>(left.size());
  rep.lattice_homs = static_cast<int>(right.size());

  auto find_in = [](std::vector<Hom> const& hs, std::vector<int> const& m) {
    auto it = std::lower_bound(hs.begin(), hs.end(), Hom{m});
    return it != hs.end() && it->map == m ? static_cast<int>(it - hs.begin())
                                          : -1;
  };

  // h -> counit o skeleton(h): an idempotent of the power is a {0,1}-valued
  // monotone map, which is the indicator of the points p with p(l) = 1.
  auto forward = [&](Hom const& h) -> int {
    std::vector<int> g;
    for (int s : sk.inclusion) {
      auto const& alpha = power.maps[h.map[s]];
      int found = -1;
      for (int y = 0; y < l.size() && found < 0; ++y) {
        bool match = true;
        for (std::size_t p = 0; p < alpha.size() && match; ++p) {
          match = (power.dual.points[p].map[y] == 1) == (alpha[p] == n);
        }
        if (match) found = y;
      }
      if (found < 0) return -1;
      g.push_back(found);
    }
    return find_in(right, g);
  };

  // g -> power(g) o unit, where power(g) precomposes with q -> q o g.
  auto backward = [&](Hom const& g) -> int {
    auto const& sk_points = unit.power.dual.points;
    std::vector<int> pulled;
    for (auto const& q : power.dual.points) {
      std::vector<int> qg;
      for (int s = 0; s < sk.lattice.size(); ++s) qg.push_back(q.map[g.map[s]]);
      int const idx = find_in(sk_points, qg);
      if (idx < 0) return -1;
      pulled.push_back(idx);
    }
    std::vector<int> h;
    for (int x = 0; x < a.size(); ++x) {
      auto const& beta = unit.power.maps[unit.map.map[x]];
      std::vector<int> alpha;
      for (int idx : pulled) alpha.push_back(beta[idx]);
      auto it = std::lower_bound(power.maps.begin(), power.maps.end(), alpha);
      if (it == power.maps.end() || *it != alpha) return -1;
      h.push_back(static_cast<int>(it - power.maps.begin()));
    }
    return find_in(left, h);
  };

  if (left.size() != right.size()) return rep;
  for (auto const& h : left) {
    int const j = forward(h);
    if (j < 0) return rep;
    rep.bijection.push_back(j);
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (backward(right[rep.bijection[i]]) != static_cast<int>(i)) return rep;
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    int const i = backward(right[j]);
    if (i < 0 || rep.bijection[i] != static_cast<int>(j)) return rep;
  }
  rep.holds = true;
  return rep;
}

}  // namespace pmv
