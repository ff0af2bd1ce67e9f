#include "pmv/homs.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace pmv {

std::vector<int> generating_set(FinAlgebra const& a) {
  std::vector<int> gens;
  std::vector<int> closure = subuniverse_generated(a, gens);
  std::vector<char> in(a.size(), 0);
  for (int x : closure) in[x] = 1;
  for (int x = 0; x < a.size(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    closure = subuniverse_generated(a, gens);
    for (int y : closure) in[y] = 1;
  }
  return gens;
}

namespace {

/// Partial map extended by closure; fails on the first clash.
class PartialHom {
 public:
  PartialHom(FinAlgebra const& s, FinAlgebra const& t)
      : s_(&s), t_(&t), map_(s.size(), -1) {}

  bool assign(int x, int image) {
    if (map_[x] >= 0) return map_[x] == image;
    map_[x] = image;
    assigned_.push_back(x);
    // Combine every newly assigned element with every assigned element.
    for (std::size_t i = assigned_.size() - 1; i < assigned_.size(); ++i) {
      int const a = assigned_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        int const b = assigned_[j];
        for (Op op : kAllOps) {
          int const r = s_->apply(op, a, b);
          int const v = t_->apply(op, map_[a], map_[b]);
          if (map_[r] < 0) {
            map_[r] = v;
            assigned_.push_back(r);
          } else if (map_[r] != v) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<int> const& map() const { return map_; }

 private:
  FinAlgebra const* s_;
  FinAlgebra const* t_;
  std::vector<int> map_;
  std::vector<int> assigned_;
};

bool search(FinAlgebra const& source, FinAlgebra const& target,
            std::vector<int> const& gens,
            std::vector<std::vector<int>> const& candidates, std::size_t level,
            PartialHom const& partial,
            std::function<bool(std::vector<int> const&)> const& visit,
            SearchBudget& budget) {
  if (level == gens.size()) return visit(partial.map());
  int const g = gens[level];
  for (int image : candidates[level]) {
    budget.tick();
    PartialHom next = partial;
    if (!next.assign(g, image)) continue;
    if (!search(source, target, gens, candidates, level + 1, next, visit,
                budget)) {
      return false;
    }
  }
  return true;
}

void for_each_hom_restricted(
    FinAlgebra const& source, FinAlgebra const& target,
    std::function<std::vector<int>(int)> const& candidates_for,
    std::function<bool(std::vector<int> const&)> const& visit,
    SearchBudget& budget) {
  PartialHom start(source, target);
  if (!start.assign(source.zero(), target.zero()) ||
      !start.assign(source.one(), target.one())) {
    return;
  }
  std::vector<int> const gens = generating_set(source);
  std::vector<std::vector<int>> candidates;
  for (int g : gens) candidates.push_back(candidates_for(g));
  search(source, target, gens, candidates, 0, start, visit, budget);
}

}  // namespace

void for_each_hom(FinAlgebra const& source, FinAlgebra const& target,
                  std::function<bool(std::vector<int> const&)> const& visit,
                  SearchBudget& budget) {
  std::vector<int> all(target.size());
  for (int i = 0; i < target.size(); ++i) all[i] = i;
  for_each_hom_restricted(
      source, target, [&](int) { return all; }, visit, budget);
}

std::vector<Hom> hom_enumerate(FinAlgebra const& source,
                               FinAlgebra const& target, SearchBudget budget) {
  std::vector<Hom> out;
  for_each_hom(
      source, target,
      [&](std::vector<int> const& m) {
        out.push_back(Hom{m});
        return true;
      },
      budget);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// (elements below, elements above, oplus-idempotent, odot-idempotent,
//  number of x with a oplus x = 1)
using Profile = std::tuple<int, int, bool, bool, int>;

std::vector<Profile> profiles(FinAlgebra const& a) {
  std::vector<Profile> out;
  for (int x = 0; x < a.size(); ++x) {
    int below = 0, above = 0, complements = 0;
    for (int y = 0; y < a.size(); ++y) {
      below += a.leq(y, x);
      above += a.leq(x, y);
      complements += a.apply(Op::oplus, x, y) == a.one();
    }
    out.emplace_back(below, above, a.apply(Op::oplus, x, x) == x,
                     a.apply(Op::odot, x, x) == x, complements);
  }
  return out;
}

}  // namespace

std::optional<Hom> find_isomorphism(FinAlgebra const& a, FinAlgebra const& b,
                                    SearchBudget budget) {
  if (a.size() != b.size()) return std::nullopt;
  auto const pa = profiles(a);
  auto const pb = profiles(b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::optional<Hom> found;
  for_each_hom_restricted(
      a, b,
      [&](int g) {
        std::vector<int> c;
        for (int y = 0; y < b.size(); ++y) {
          if (pb[y] == pa[g]) c.push_back(y);
        }
        return c;
      },
      [&](std::vector<int> const& m) {
        Hom h{m};
        if (!h.injective()) return true;
        found = std::move(h);
        return false;
      },
      budget);
  return found;
}

std::optional<PmvEmbedding> pmv_membership(FinAlgebra const& a, int n,
                                           SearchBudget budget) {
  FinAlgebra const chain = FinAlgebra::chain(n);
  PmvEmbedding emb;
  emb.n = n;
  emb.homs = hom_enumerate(a, chain, budget);
  emb.coordinates.assign(a.size(), {});
  for (int x = 0; x < a.size(); ++x) {
    for (auto const& h : emb.homs) emb.coordinates[x].push_back(h.map[x]);
  }
  std::vector<std::vector<int>> sorted = emb.coordinates;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return std::nullopt;
  }
  return emb;
}

}  // namespace pmv
