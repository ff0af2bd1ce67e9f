#include "pmv/space.hpp"

#include <algorithm>
#include <sstream>

namespace pmv {

StructSpace::StructSpace(int n, int size) : n_(n), size_(size) {
  if (size < 0) throw InvalidInput("space size must be >= 0");
  rel_.assign(relation_lattice(n).size(),
              std::vector<char>(static_cast<std::size_t>(size) * size, 0));
}

void StructSpace::set(int r, int x, int y, bool on) {
  if (r < 0 || r >= relation_count()) {
    throw InvalidElement("relation index " + std::to_string(r) +
                         " out of range");
  }
  if (x < 0 || x >= size_ || y < 0 || y >= size_) {
    throw InvalidElement("point outside the carrier of size " +
                         std::to_string(size_));
  }
  rel_[r][x * size_ + y] = on ? 1 : 0;
}

int StructSpace::relation_index(GoodSeq const& s) const {
  if (auto i = lattice().find(s)) return *i;
  throw InvalidInput("no relation " + s.to_string() + " in S_" +
                     std::to_string(n_));
}

std::vector<std::pair<int, int>> StructSpace::pairs(int r) const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y)
      if (related(r, x, y)) out.emplace_back(x, y);
  return out;
}

std::uint64_t StructSpace::type_of(int x, int y) const {
  if (relation_count() > 64) {
    throw SizeLimitExceeded("relation types need at most 64 relations");
  }
  std::uint64_t t = 0;
  for (int r = 0; r < relation_count(); ++r) {
    if (related(r, x, y)) t |= std::uint64_t{1} << r;
  }
  return t;
}

bool StructSpace::relations_monotone() const {
  auto const& l = lattice();
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      if (a == b || !l.leq(a, b)) continue;
      for (std::size_t i = 0; i < rel_[a].size(); ++i) {
        if (rel_[a][i] && !rel_[b][i]) return false;
      }
    }
  }
  return true;
}

StructSpace StructSpace::induced(std::vector<int> const& points) const {
  StructSpace s(n_, static_cast<int>(points.size()));
  for (int r = 0; r < relation_count(); ++r)
    for (int i = 0; i < s.size_; ++i)
      for (int j = 0; j < s.size_; ++j)
        if (related(r, points[i], points[j])) s.set(r, i, j);
  return s;
}

namespace {

void require_same_signature(StructSpace const& a, StructSpace const& b) {
  if (a.n() != b.n()) {
    throw InvalidInput("spaces over different relation sets (n = " +
                       std::to_string(a.n()) + " vs " + std::to_string(b.n()) +
                       ")");
  }
}

// Compatibility of the newest assignment map[i] with map[0..i].
bool extends(StructSpace const& s, StructSpace const& t,
             std::vector<int> const& map, int i, bool reflect) {
  for (int j = 0; j <= i; ++j) {
    for (int r = 0; r < s.relation_count(); ++r) {
      bool const fwd = s.related(r, i, j);
      bool const bwd = s.related(r, j, i);
      bool const tf = t.related(r, map[i], map[j]);
      bool const tb = t.related(r, map[j], map[i]);
      if ((fwd && !tf) || (bwd && !tb)) return false;
      if (reflect && (fwd != tf || bwd != tb)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_morphism(StructSpace const& source, StructSpace const& target,
                 std::vector<int> const& map) {
  require_same_signature(source, target);
  if (static_cast<int>(map.size()) != source.size()) return false;
  for (int v : map) {
    if (v < 0 || v >= target.size()) return false;
  }
  for (int r = 0; r < source.relation_count(); ++r) {
    for (auto [x, y] : source.pairs(r)) {
      if (!target.related(r, map[x], map[y])) return false;
    }
  }
  return true;
}

void for_each_morphism(StructSpace const& source, StructSpace const& target,
                       std::function<bool(std::vector<int> const&)> const& visit,
                       SearchBudget& budget, bool surjective_only) {
  require_same_signature(source, target);
  int const p = source.size();
  int const q = target.size();
  if (surjective_only && q > p) return;
  if (p == 0) {
    if (!surjective_only || q == 0) visit({});
    return;
  }
  if (q == 0) return;
  std::vector<int> map(p, 0);
  std::vector<int> hits(q, 0);
  int covered = 0;
  bool stop = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == p) {
      if (!surjective_only || covered == q) stop = !visit(map);
      return;
    }
    for (int v = 0; v < q && !stop; ++v) {
      budget.tick();
      map[i] = v;
      if (!extends(source, target, map, i, false)) continue;
      if (hits[v]++ == 0) ++covered;
      if (!surjective_only || q - covered <= p - i - 1) self(self, i + 1);
      if (--hits[v] == 0) --covered;
    }
  };
  rec(rec, 0);
}

std::vector<std::vector<int>> morphisms(StructSpace const& source,
                                        StructSpace const& target,
                                        SearchBudget budget) {
  std::vector<std::vector<int>> out;
  for_each_morphism(
      source, target,
      [&](std::vector<int> const& m) {
        out.push_back(m);
        return true;
      },
      budget);
  return out;
}

std::optional<std::vector<int>> find_space_isomorphism(StructSpace const& a,
                                                       StructSpace const& b,
                                                       SearchBudget budget) {
  require_same_signature(a, b);
  int const p = a.size();
  if (p != b.size()) return std::nullopt;
  for (int r = 0; r < a.relation_count(); ++r) {
    if (a.pairs(r).size() != b.pairs(r).size()) return std::nullopt;
  }
  std::vector<int> map(p, 0);
  std::vector<char> used(p, 0);
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == p) {
      found = map;
      return;
    }
    for (int v = 0; v < p && !found; ++v) {
      if (used[v]) continue;
      budget.tick();
      map[i] = v;
      if (!extends(a, b, map, i, true)) continue;
      used[v] = 1;
      self(self, i + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
  return found;
}

StructSpace disjoint_union(StructSpace const& a, StructSpace const& b) {
  require_same_signature(a, b);
  StructSpace u(a.n(), a.size() + b.size());
  for (int r = 0; r < a.relation_count(); ++r) {
    for (auto [x, y] : a.pairs(r)) u.set(r, x, y);
    for (auto [x, y] : b.pairs(r)) u.set(r, a.size() + x, a.size() + y);
  }
  return u;
}

std::string to_dot(StructSpace const& x) {
  int const le = x.leq_index();
  int const tri = x.lattice().bottom;
  std::ostringstream os;
  os << "digraph X {\n  rankdir=BT;\n";
  for (int v = 0; v < x.size(); ++v) {
    os << "  p" << v << " [label=\"" << v << "\""
       << (x.related(tri, v, v) && tri != le ? ", shape=doublecircle" : "")
       << "];\n";
  }
  for (int u = 0; u < x.size(); ++u) {
    for (int v = 0; v < x.size(); ++v) {
      if (u == v || !x.related(le, u, v)) continue;
      bool cover = true;
      for (int w = 0; w < x.size() && cover; ++w) {
        if (w != u && w != v && x.related(le, u, w) && x.related(le, w, v)) {
          cover = false;
        }
      }
      if (cover) os << "  p" << u << " -> p" << v << " [arrowhead=none];\n";
    }
  }
  if (tri != le) {
    for (auto [u, v] : x.pairs(tri)) {
      if (u != v) os << "  p" << u << " -> p" << v << " [style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace pmv
