#include "pmv/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pmv/error.hpp"

namespace pmv {

int Congruence::block_count() const {
  return block_of.empty()
             ? 0
             : *std::max_element(block_of.begin(), block_of.end()) + 1;
}

bool Congruence::refines(Congruence const& other) const {
  std::vector<int> rep(block_count(), -1);
  for (std::size_t x = 0; x < block_of.size(); ++x) {
    int& r = rep[block_of[x]];
    if (r < 0) {
      r = other.block_of[x];
    } else if (r != other.block_of[x]) {
      return false;
    }
  }
  return true;
}

Congruence normalize(std::vector<int> labels) {
  std::map<int, int> relabel;
  for (int& l : labels) {
    auto [it, inserted] = relabel.emplace(l, static_cast<int>(relabel.size()));
    l = it->second;
  }
  return Congruence{std::move(labels)};
}

bool is_congruence(FinAlgebra const& a, std::vector<int> const& block_of) {
  int const m = a.size();
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (block_of[x] != block_of[y]) continue;
      for (int z = 0; z < m; ++z) {
        for (Op op : kAllOps) {
          if (block_of[a.apply(op, x, z)] != block_of[a.apply(op, y, z)]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

// Every pair of assigned related elements, combined with every assigned z,
// must land in one block whenever both results are already assigned.
bool consistent_prefix(FinAlgebra const& a, std::vector<int> const& label,
                       int last) {
  for (int x = 0; x <= last; ++x) {
    for (int y = x + 1; y <= last; ++y) {
      if (label[x] != label[y]) continue;
      for (int z = 0; z <= last; ++z) {
        for (Op op : kAllOps) {
          int const r1 = a.apply(op, x, z);
          int const r2 = a.apply(op, y, z);
          if (r1 <= last && r2 <= last && label[r1] != label[r2]) return false;
        }
      }
    }
  }
  return true;
}

void scan(FinAlgebra const& a, std::vector<int>& label, int pos, int blocks,
          std::vector<Congruence>& out) {
  int const m = a.size();
  if (pos == m) {
    if (is_congruence(a, label)) out.push_back(Congruence{label});
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    label[pos] = b;
    if (consistent_prefix(a, label, pos)) {
      scan(a, label, pos + 1, std::max(blocks, b + 1), out);
    }
  }
  label[pos] = -1;
}

void sort_congruences(std::vector<Congruence>& v) {
  std::sort(v.begin(), v.end(), [](auto const& x, auto const& y) {
    int const bx = x.block_count(), by = y.block_count();
    return bx != by ? bx > by : x.block_of < y.block_of;
  });
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }
  std::vector<int> labels() {
    std::vector<int> out(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      out[i] = find(static_cast<int>(i));
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

Congruence close_under_operations(FinAlgebra const& a, UnionFind uf) {
  int const m = a.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (int z = 0; z < m; ++z) {
          for (Op op : kAllOps) {
            changed |= uf.unite(a.apply(op, x, z), a.apply(op, y, z));
          }
        }
      }
    }
  }
  return normalize(uf.labels());
}

}  // namespace

std::vector<Congruence> congruences_by_partition_scan(FinAlgebra const& a) {
  if (a.size() > 12) {
    throw SizeLimitExceeded("partition scan limited to 12 elements, got " +
                            std::to_string(a.size()));
  }
  std::vector<int> label(a.size(), -1);
  std::vector<Congruence> out;
  label[0] = 0;
  scan(a, label, 1, 1, out);
  sort_congruences(out);
  return out;
}

Congruence principal_congruence(FinAlgebra const& a, int x, int y) {
  UnionFind uf(a.size());
  uf.unite(x, y);
  return close_under_operations(a, std::move(uf));
}

Congruence congruence_join(Congruence const& a, Congruence const& b) {
  int const m = static_cast<int>(a.block_of.size());
  UnionFind uf(m);
  std::vector<int> first_a(m, -1), first_b(m, -1);
  for (int x = 0; x < m; ++x) {
    int& fa = first_a[a.block_of[x]];
    if (fa < 0) fa = x; else uf.unite(fa, x);
    int& fb = first_b[b.block_of[x]];
    if (fb < 0) fb = x; else uf.unite(fb, x);
  }
  return normalize(uf.labels());
}

Congruence congruence_meet(Congruence const& a, Congruence const& b) {
  std::vector<int> labels(a.block_of.size());
  int const nb = b.block_count();
  for (std::size_t x = 0; x < labels.size(); ++x) {
    labels[x] = a.block_of[x] * nb + b.block_of[x];
  }
  return normalize(std::move(labels));
}

std::vector<Congruence> congruences_by_principal_closure(FinAlgebra const& a) {
  if (a.size() > 64) {
    throw SizeLimitExceeded("principal-congruence closure limited to 64 "
                            "elements, got " + std::to_string(a.size()));
  }
  int const m = a.size();
  std::vector<int> delta(m);
  std::iota(delta.begin(), delta.end(), 0);
  std::set<Congruence> all{Congruence{delta}};
  std::vector<Congruence> principals;
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      auto c = principal_congruence(a, x, y);
      if (all.insert(c).second) principals.push_back(c);
    }
  }
  std::vector<Congruence> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (auto const& c : frontier) {
      for (auto const& p : principals) {
        auto j = congruence_join(c, p);
        if (all.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Congruence> out(all.begin(), all.end());
  sort_congruences(out);
  return out;
}

std::vector<Congruence> congruences(FinAlgebra const& a) {
  return a.size() <= 12 ? congruences_by_partition_scan(a)
                        : congruences_by_principal_closure(a);
}

bool is_simple(FinAlgebra const& a) { return congruences(a).size() == 2; }

}  // namespace pmv
