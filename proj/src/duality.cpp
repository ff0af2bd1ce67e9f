#include "pmv/duality.hpp"

#include <algorithm>
#include <set>

#include "pmv/congruence.hpp"
#include "pmv/homs.hpp"

namespace pmv {

StructSpace alter_ego(int n) {
  StructSpace m(n, n + 1);
  auto const& l = relation_lattice(n);
  for (int r = 0; r < l.size(); ++r) {
    for (auto [x, y] : seq_to_rel(l.elements[r]).pairs()) m.set(r, x, y);
  }
  return m;
}

DualSpace dual_space(FinAlgebra const& a, int n, SearchBudget budget) {
  auto const& l = relation_lattice(n);
  std::vector<BinRel> rels;
  for (auto const& s : l.elements) rels.push_back(seq_to_rel(s));

  auto points = hom_enumerate(a, FinAlgebra::chain(n), budget);
  int const p = static_cast<int>(points.size());
  StructSpace x(n, p);
  for (int r = 0; r < l.size(); ++r) {
    for (int u = 0; u < p; ++u) {
      for (int v = 0; v < p; ++v) {
        bool all = true;
        for (int e = 0; e < a.size() && all; ++e) {
          all = rels[r].contains(points[u].map[e], points[v].map[e]);
        }
        if (all) x.set(r, u, v);
      }
    }
  }
  return {std::move(x), std::move(points)};
}

DualAlgebra dual_algebra(StructSpace const& x, SearchBudget budget) {
  int const n = x.n();
  auto maps = morphisms(x, alter_ego(n), budget);
  int const m = static_cast<int>(maps.size());
  if (x.size() == 0) return {FinAlgebra::trivial(), std::move(maps)};

  auto index_of = [&maps](std::vector<int> const& f) {
    auto it = std::lower_bound(maps.begin(), maps.end(), f);
    if (it == maps.end() || *it != f) {
      throw InternalConsistencyError(
          "pointwise operation left the set of morphisms");
    }
    return static_cast<int>(it - maps.begin());
  };

  std::array<FinAlgebra::Table, 4> tables;
  std::vector<int> f(x.size());
  for (Op op : kAllOps) {
    auto& t = tables[static_cast<std::size_t>(op)];
    t.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        for (int v = 0; v < x.size(); ++v) {
          f[v] = apply_op(op, maps[i][v], maps[j][v], n);
        }
        t[i * m + j] = index_of(f);
      }
    }
  }
  int const zero = index_of(std::vector<int>(x.size(), 0));
  int const one = index_of(std::vector<int>(x.size(), n));
  FinAlgebra alg(FinAlgebra::Trusted{}, m, std::move(tables), zero, one,
                 "E(X)");
  std::vector<std::string> names;
  for (auto const& g : maps) {
    std::string s = "(";
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (v) s += ",";
      s += format_value(g[v], n);
    }
    names.push_back(s + ")");
  }
  alg.set_names(std::move(names));
  return {std::move(alg), std::move(maps)};
}

EvaluationE evaluation_e(FinAlgebra const& a, int n, SearchBudget budget) {
  auto d = dual_space(a, n, budget);
  auto e = dual_algebra(d.space, budget);
  std::vector<int> map(a.size());
  std::vector<int> f(d.points.size());
  for (int el = 0; el < a.size(); ++el) {
    for (std::size_t u = 0; u < d.points.size(); ++u) {
      f[u] = d.points[u].map[el];
    }
    auto it = std::lower_bound(e.maps.begin(), e.maps.end(), f);
    if (it == e.maps.end() || *it != f) {
      throw InternalConsistencyError("e_A(" + a.name(el) +
                                     ") is not a morphism");
    }
    map[el] = static_cast<int>(it - e.maps.begin());
  }
  if (!is_homomorphism(a, e.algebra, map)) {
    throw InternalConsistencyError("e_A is not a homomorphism");
  }
  EvaluationE out{Hom{map}, a.size(), e.algebra.size(), false, false};
  out.injective = out.map.injective();
  out.surjective = out.map.surjective(e.algebra.size());
  return out;
}

EvaluationEps evaluation_eps(StructSpace const& x, SearchBudget budget) {
  auto const report = xn_membership(x, budget);
  if (!report.member) {
    throw NotAMember("space is not in the dual category: " + report.witness);
  }
  auto e = dual_algebra(x, budget);
  auto d = dual_space(e.algebra, x.n(), budget);
  std::vector<int> map(x.size());
  std::vector<int> f(e.maps.size());
  for (int v = 0; v < x.size(); ++v) {
    for (std::size_t al = 0; al < e.maps.size(); ++al) f[al] = e.maps[al][v];
    auto it = std::find_if(d.points.begin(), d.points.end(),
                           [&f](Hom const& h) { return h.map == f; });
    if (it == d.points.end()) {
      throw InternalConsistencyError("eps_X(" + std::to_string(v) +
                                     ") is not a homomorphism");
    }
    map[v] = static_cast<int>(it - d.points.begin());
  }
  if (!is_morphism(x, d.space, map)) {
    throw InternalConsistencyError("eps_X does not preserve the relations");
  }
  EvaluationEps out;
  out.map = map;
  out.source_size = x.size();
  out.target_size = d.space.size();
  std::vector<int> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  out.injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  out.surjective = out.injective && out.source_size == out.target_size;
  out.reflecting = true;
  for (int r = 0; r < x.relation_count() && out.reflecting; ++r) {
    for (int u = 0; u < x.size() && out.reflecting; ++u) {
      for (int v = 0; v < x.size(); ++v) {
        if (d.space.related(r, map[u], map[v]) && !x.related(r, u, v)) {
          out.reflecting = false;
          break;
        }
      }
    }
  }
  return out;
}

MembershipReport xn_membership(StructSpace const& x, SearchBudget budget) {
  auto const& l = x.lattice();
  auto const m = alter_ego(x.n());
  auto const phis = morphisms(x, m, budget);
  MembershipReport rep;
  std::set<std::vector<int>> used;

  for (int u = 0; u < x.size(); ++u) {
    for (int v = u + 1; v < x.size(); ++v) {
      auto it = std::find_if(phis.begin(), phis.end(),
                             [&](auto const& f) { return f[u] != f[v]; });
      if (it == phis.end()) {
        rep.member = false;
        rep.witness = "no morphism separates points " + std::to_string(u) +
                      " and " + std::to_string(v);
        return rep;
      }
      used.insert(*it);
    }
  }
  for (int r = 0; r < l.size(); ++r) {
    for (int u = 0; u < x.size(); ++u) {
      for (int v = 0; v < x.size(); ++v) {
        if (x.related(r, u, v)) continue;
        auto it = std::find_if(phis.begin(), phis.end(), [&](auto const& f) {
          return !m.related(r, f[u], f[v]);
        });
        if (it == phis.end()) {
          rep.member = false;
          rep.witness = "pair (" + std::to_string(u) + "," +
                        std::to_string(v) + ") outside " +
                        l.elements[r].to_string() +
                        " is not separated by any morphism";
          return rep;
        }
        used.insert(*it);
      }
    }
  }
  rep.embedding.assign(used.begin(), used.end());
  return rep;
}

namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// All subsets of the carrier closed upwards under rel, as bitmasks.
std::vector<std::uint32_t> upsets(StructSpace const& x, int rel) {
  int const p = x.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << p); ++s) {
    bool ok = true;
    for (int u = 0; u < p && ok; ++u) {
      if (!(s >> u & 1)) continue;
      for (int v = 0; v < p; ++v) {
        if (x.related(rel, u, v) && !(s >> v & 1)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace

X2Report x2_axiom_check(StructSpace const& x) {
  if (x.n() != 2) {
    throw InvalidInput("the X_2 axioms need a space over n = 2, got n = " +
                       std::to_string(x.n()));
  }
  if (x.size() > 20) throw SizeLimitExceeded("x2_axiom_check needs <= 20 points");
  int const tri = x.lattice().bottom;
  int const le = x.lattice().top;
  int const p = x.size();
  X2Report rep;

  for (auto [u, v] : x.pairs(tri)) {
    if (!x.related(le, u, v)) {
      rep.a = false;
      rep.witness_a = pair_text(u, v) + " in triangle but not in order";
      break;
    }
  }

  for (int u = 0; u < p && rep.b; ++u) {
    if (!x.related(le, u, u)) {
      rep.b = false;
      rep.witness_b = "order not reflexive at " + std::to_string(u);
    }
  }
  for (int u = 0; u < p && rep.b; ++u) {
    for (int v = 0; v < p && rep.b; ++v) {
      if (u != v && x.related(le, u, v) && x.related(le, v, u)) {
        rep.b = false;
        rep.witness_b = "order not antisymmetric at " + pair_text(u, v);
      }
      for (int w = 0; w < p && rep.b; ++w) {
        if (x.related(le, u, v) && x.related(le, v, w) &&
            !x.related(le, u, w)) {
          rep.b = false;
          rep.witness_b = "order not transitive at " + pair_text(u, v) +
                          "," + pair_text(v, w);
        }
      }
    }
  }

  auto const ups = upsets(x, le);
  for (int u = 0; u < p && rep.c; ++u) {
    for (int v = 0; v < p && rep.c; ++v) {
      if (!x.related(le, u, v) || x.related(tri, u, v)) continue;
      bool found = false;
      for (std::uint32_t up : ups) {
        if (up >> v & 1) continue;
        // Smallest downset D with z in D whenever z tri z' and z' not in U.
        std::uint32_t down = 0;
        for (auto [z, z2] : x.pairs(tri)) {
          if (!(up >> z2 & 1)) down |= std::uint32_t{1} << z;
        }
        for (bool grew = true; grew;) {
          grew = false;
          for (int a = 0; a < p; ++a) {
            if (!(down >> a & 1)) continue;
            for (int b = 0; b < p; ++b) {
              if (x.related(le, b, a) && !(down >> b & 1)) {
                down |= std::uint32_t{1} << b;
                grew = true;
              }
            }
          }
        }
        if (!(down >> u & 1)) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.c = false;
        rep.witness_c = "no upset/downset pair cuts " + pair_text(u, v);
      }
    }
  }
  return rep;
}

CongruenceSubstructureReport congruence_substructure_check(
    FinAlgebra const& a, int n, SearchBudget budget) {
  auto const d = dual_space(a, n, budget);
  int const p = d.space.size();
  if (p > 10) throw SizeLimitExceeded("dual space too large for subset scan");
  auto const cons = congruences(a);

  CongruenceSubstructureReport rep;
  rep.congruence_count = static_cast<int>(cons.size());
  rep.substructure_count = 1 << p;

  std::vector<Congruence> image;
  for (std::uint32_t y = 0; y < (std::uint32_t{1} << p); ++y) {
    std::vector<int> labels(a.size());
    std::vector<std::vector<int>> keys(a.size());
    for (int el = 0; el < a.size(); ++el) {
      for (int u = 0; u < p; ++u) {
        if (y >> u & 1) keys[el].push_back(d.points[u].map[el]);
      }
    }
    for (int el = 0; el < a.size(); ++el) {
      labels[el] = static_cast<int>(
          std::find(keys.begin(), keys.end(), keys[el]) - keys.begin());
    }
    image.push_back(normalize(labels));
  }

  std::vector<Congruence> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  std::vector<Congruence> sorted_cons = cons;
  std::sort(sorted_cons.begin(), sorted_cons.end());
  if (std::adjacent_find(sorted_image.begin(), sorted_image.end()) !=
          sorted_image.end() ||
      sorted_image != sorted_cons) {
    return rep;
  }
  for (std::uint32_t y1 = 0; y1 < image.size(); ++y1) {
    for (std::uint32_t y2 = 0; y2 < image.size(); ++y2) {
      bool const subset = (y1 & ~y2) == 0;
      if (subset != image[y2].refines(image[y1])) return rep;
    }
  }
  rep.holds = true;
  return rep;
}

}  // namespace pmv
