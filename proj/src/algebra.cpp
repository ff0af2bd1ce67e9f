#include "pmv/algebra.hpp"

#include <algorithm>
#include <set>

#include "pmv/error.hpp"

namespace pmv {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

std::string pair(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

FinAlgebra::FinAlgebra(Trusted, int size, std::array<Table, 4> tables,
                       int zero, int one, std::string label)
    : size_(size),
      tables_(std::move(tables)),
      zero_(zero),
      one_(one),
      label_(std::move(label)) {}

FinAlgebra FinAlgebra::from_tables(int size, std::array<Table, 4> tables,
                                   int zero, int one, std::string label) {
  if (size < 1) throw InvalidInput("algebra size must be >= 1");
  auto const cells = static_cast<std::size_t>(size) * size;
  for (Op op : kAllOps) {
    auto const& t = tables[static_cast<std::size_t>(op)];
    if (t.size() != cells) {
      throw InvalidInput(std::string(op_name(op)) + " table has " +
                         std::to_string(t.size()) + " entries, expected " +
                         std::to_string(cells));
    }
    for (int v : t) {
      if (v < 0 || v >= size) {
        throw InvalidElement(std::string(op_name(op)) + " table entry " +
                             std::to_string(v) + " outside carrier");
      }
    }
  }
  if (zero < 0 || zero >= size || one < 0 || one >= size) {
    throw InvalidElement("constant outside carrier");
  }
  FinAlgebra a(Trusted{}, size, std::move(tables), zero, one,
               std::move(label));
  validate_algebra(a);
  return a;
}

void validate_algebra(FinAlgebra const& a) {
  int const m = a.size();
  auto const meet = [&](int x, int y) { return a.apply(Op::meet, x, y); };
  auto const join = [&](int x, int y) { return a.apply(Op::join, x, y); };

  for (int x = 0; x < m; ++x) {
    if (meet(x, x) != x) throw AxiomViolation("meet idempotent", pair(x, x));
    if (join(x, x) != x) throw AxiomViolation("join idempotent", pair(x, x));
  }
  for (Op op : kAllOps) {
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (a.apply(op, x, y) != a.apply(op, y, x)) {
          throw AxiomViolation(std::string(op_name(op)) + " commutative",
                               pair(x, y));
        }
      }
    }
  }
  for (Op op : kAllOps) {
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        int const xy = a.apply(op, x, y);
        for (int z = 0; z < m; ++z) {
          if (a.apply(op, xy, z) != a.apply(op, x, a.apply(op, y, z))) {
            throw AxiomViolation(std::string(op_name(op)) + " associative",
                                 triple(x, y, z));
          }
        }
      }
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (meet(x, join(x, y)) != x || join(x, meet(x, y)) != x) {
        throw AxiomViolation("absorption", pair(x, y));
      }
    }
  }
  for (int x = 0; x < m; ++x) {
    if (meet(a.zero(), x) != a.zero() || meet(a.one(), x) != x) {
      throw AxiomViolation("bounded lattice", "element " + std::to_string(x));
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
          throw AxiomViolation("distributivity", triple(x, y, z));
        }
      }
    }
  }
  for (int x = 0; x < m; ++x) {
    if (a.apply(Op::oplus, x, a.zero()) != x) {
      throw AxiomViolation("oplus unit", "element " + std::to_string(x));
    }
    if (a.apply(Op::odot, x, a.one()) != x) {
      throw AxiomViolation("odot unit", "element " + std::to_string(x));
    }
  }
  for (Op op : {Op::oplus, Op::odot}) {
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (!a.leq(x, y)) continue;
        for (int z = 0; z < m; ++z) {
          if (!a.leq(a.apply(op, x, z), a.apply(op, y, z))) {
            throw AxiomViolation(std::string(op_name(op)) + " monotone",
                                 triple(x, y, z));
          }
        }
      }
    }
  }
}

FinAlgebra FinAlgebra::chain(int n) {
  Chain const c(n);
  int const m = c.size();
  std::array<Table, 4> tables;
  for (Op op : kAllOps) {
    auto& t = tables[static_cast<std::size_t>(op)];
    t.resize(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) t[x * m + y] = apply_op(op, x, y, n);
    }
  }
  FinAlgebra a(Trusted{}, m, std::move(tables), 0, n, "PL" + std::to_string(n));
  std::vector<std::string> names;
  for (int x = 0; x < m; ++x) names.push_back(format_value(x, n));
  a.set_names(std::move(names));
  return a;
}

FinAlgebra FinAlgebra::trivial() {
  std::array<Table, 4> tables;
  for (auto& t : tables) t = {0};
  return FinAlgebra(Trusted{}, 1, std::move(tables), 0, 0, "trivial");
}

std::string FinAlgebra::name(int a) const {
  if (static_cast<std::size_t>(a) < names_.size()) return names_[a];
  return std::to_string(a);
}

void FinAlgebra::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != size_) {
    throw InvalidInput("name list length differs from algebra size");
  }
  names_ = std::move(names);
}

FinAlgebra product(FinAlgebra const& a, FinAlgebra const& b) {
  int const ma = a.size();
  int const mb = b.size();
  int const m = ma * mb;
  std::array<FinAlgebra::Table, 4> tables;
  for (Op op : kAllOps) {
    auto& t = tables[static_cast<std::size_t>(op)];
    t.resize(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        t[x * m + y] = a.apply(op, x / mb, y / mb) * mb +
                       b.apply(op, x % mb, y % mb);
      }
    }
  }
  FinAlgebra p(FinAlgebra::Trusted{}, m, std::move(tables),
               a.zero() * mb + b.zero(), a.one() * mb + b.one(),
               a.label() + "x" + b.label());
  std::vector<std::string> names;
  for (int x = 0; x < m; ++x) {
    names.push_back("(" + a.name(x / mb) + "," + b.name(x % mb) + ")");
  }
  p.set_names(std::move(names));
  return p;
}

int power_index(int n, std::span<int const> coords) {
  int idx = 0;
  for (int c : coords) idx = idx * (n + 1) + c;
  return idx;
}

std::vector<int> power_coords(int n, int k, int index) {
  std::vector<int> coords(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    coords[i] = index % (n + 1);
    index /= n + 1;
  }
  return coords;
}

FinAlgebra chain_power(int n, int k) {
  Chain const c(n);
  if (k < 0) throw InvalidInput("negative exponent");
  if (k == 0) {
    FinAlgebra t = FinAlgebra::trivial();
    t.set_label("PL" + std::to_string(n) + "^0");
    return t;
  }
  if (k == 1) return FinAlgebra::chain(n);
  int m = 1;
  for (int i = 0; i < k; ++i) {
    if (m > 4096 / (n + 1)) throw SizeLimitExceeded("chain power too large");
    m *= n + 1;
  }
  std::vector<std::vector<int>> coords(m);
  for (int x = 0; x < m; ++x) coords[x] = power_coords(n, k, x);
  std::array<FinAlgebra::Table, 4> tables;
  std::vector<int> tmp(static_cast<std::size_t>(k));
  for (Op op : kAllOps) {
    auto& t = tables[static_cast<std::size_t>(op)];
    t.resize(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        for (int i = 0; i < k; ++i) {
          tmp[i] = apply_op(op, coords[x][i], coords[y][i], n);
        }
        t[x * m + y] = power_index(n, tmp);
      }
    }
  }
  FinAlgebra p(FinAlgebra::Trusted{}, m, std::move(tables), 0, m - 1,
               "PL" + std::to_string(n) + "^" + std::to_string(k));
  std::vector<std::string> names;
  for (int x = 0; x < m; ++x) {
    std::string s = "(";
    for (int i = 0; i < k; ++i) {
      if (i) s += ",";
      s += format_value(coords[x][i], n);
    }
    names.push_back(s + ")");
  }
  p.set_names(std::move(names));
  return p;
}

std::vector<int> subuniverse_generated(FinAlgebra const& a,
                                       std::span<int const> gens) {
  int const m = a.size();
  std::vector<char> in(m, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (x < 0 || x >= m) throw InvalidElement("generator outside carrier");
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(a.zero());
  add(a.one());
  for (int g : gens) add(g);
  // elems[0, done) have been combined with each other.
  for (std::size_t done = 0; done < elems.size(); ++done) {
    int const x = elems[done];
    for (std::size_t j = 0; j <= done; ++j) {
      int const y = elems[j];
      for (Op op : kAllOps) add(a.apply(op, x, y));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

SubalgebraOf restrict_to(FinAlgebra const& a, std::vector<int> carrier) {
  std::sort(carrier.begin(), carrier.end());
  std::vector<int> local(a.size(), -1);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    local[carrier[i]] = static_cast<int>(i);
  }
  int const m = static_cast<int>(carrier.size());
  std::array<FinAlgebra::Table, 4> tables;
  for (Op op : kAllOps) {
    auto& t = tables[static_cast<std::size_t>(op)];
    t.resize(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        int const r = local[a.apply(op, carrier[x], carrier[y])];
        if (r < 0) throw InvalidInput("carrier is not a subuniverse");
        t[x * m + y] = r;
      }
    }
  }
  if (local[a.zero()] < 0 || local[a.one()] < 0) {
    throw InvalidInput("carrier misses a constant");
  }
  FinAlgebra sub(FinAlgebra::Trusted{}, m, std::move(tables), local[a.zero()],
                 local[a.one()], "sub(" + a.label() + ")");
  if (!a.names().empty()) {
    std::vector<std::string> names;
    for (int x : carrier) names.push_back(a.name(x));
    sub.set_names(std::move(names));
  }
  return {std::move(sub), std::move(carrier)};
}

SubalgebraOf subalgebra_generated(FinAlgebra const& a,
                                  std::span<int const> gens) {
  return restrict_to(a, subuniverse_generated(a, gens));
}

std::vector<std::vector<int>> all_subuniverses(FinAlgebra const& a) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier{subuniverse_generated(a, {})};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto const& s : frontier) {
      std::vector<char> in(a.size(), 0);
      for (int x : s) in[x] = 1;
      for (int x = 0; x < a.size(); ++x) {
        if (in[x]) continue;
        std::vector<int> gens = s;
        gens.push_back(x);
        auto closed = subuniverse_generated(a, gens);
        if (seen.insert(closed).second) next.push_back(std::move(closed));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

bool is_homomorphism(FinAlgebra const& source, FinAlgebra const& target,
                     std::span<int const> map) {
  int const m = source.size();
  if (static_cast<int>(map.size()) != m) return false;
  for (int v : map) {
    if (v < 0 || v >= target.size()) return false;
  }
  if (map[source.zero()] != target.zero() ||
      map[source.one()] != target.one()) {
    return false;
  }
  for (Op op : kAllOps) {
    for (int x = 0; x < m; ++x) {
      for (int y = x; y < m; ++y) {
        if (map[source.apply(op, x, y)] != target.apply(op, map[x], map[y])) {
          return false;
        }
      }
    }
  }
  return true;
}

Hom Hom::checked(FinAlgebra const& source, FinAlgebra const& target,
                 std::vector<int> map) {
  if (!is_homomorphism(source, target, map)) {
    throw InvalidInput("map is not a homomorphism " + source.label() +
                       " -> " + target.label());
  }
  return Hom{std::move(map)};
}

bool Hom::injective() const {
  std::vector<int> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool Hom::surjective(int target_size) const {
  std::vector<char> hit(target_size, 0);
  for (int v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

Hom compose(Hom const& second, Hom const& first) {
  Hom out;
  out.map.reserve(first.map.size());
  for (int v : first.map) out.map.push_back(second.map[v]);
  return out;
}

}  // namespace pmv
