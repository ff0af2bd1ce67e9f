#include "pmv/order_subalgebras.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "pmv/error.hpp"

namespace pmv {

BinRel::BinRel(int n)
    : n_(n), cells_(static_cast<std::size_t>(n + 1) * (n + 1), 0) {
  if (n < 1) throw InvalidInput("relation needs n >= 1");
}

std::size_t BinRel::index(int x, int y) const {
  if (x < 0 || x > n_ || y < 0 || y > n_) {
    throw InvalidElement("pair (" + std::to_string(x) + "," +
                         std::to_string(y) + ") outside 0.." +
                         std::to_string(n_));
  }
  return static_cast<std::size_t>(x) * (n_ + 1) + y;
}

BinRel BinRel::leq(int n) {
  BinRel r(n);
  for (int x = 0; x <= n; ++x)
    for (int y = x; y <= n; ++y) r.insert(x, y);
  return r;
}

BinRel BinRel::geq(int n) { return leq(n).converse(); }

BinRel BinRel::triangle(int n) {
  BinRel r(n);
  for (int v = 0; v <= n; ++v) {
    r.insert(0, v);
    r.insert(v, n);
  }
  return r;
}

BinRel BinRel::full(int n) {
  BinRel r(n);
  std::fill(r.cells_.begin(), r.cells_.end(), 1);
  return r;
}

BinRel BinRel::diagonal(Subalgebra const& s) {
  BinRel r(s.n);
  for (int v : s.carrier) r.insert(v, v);
  return r;
}

BinRel BinRel::product(Subalgebra const& first, Subalgebra const& second) {
  BinRel r(first.n);
  for (int x : first.carrier)
    for (int y : second.carrier) r.insert(x, y);
  return r;
}

BinRel BinRel::from_pairs(int n, std::vector<std::pair<int, int>> const& ps) {
  BinRel r(n);
  for (auto [x, y] : ps) r.insert(x, y);
  return r;
}

int BinRel::count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1));
}

std::vector<std::pair<int, int>> BinRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x <= n_; ++x)
    for (int y = 0; y <= n_; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

bool BinRel::subset_of(BinRel const& other) const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] && !other.cells_[i]) return false;
  }
  return true;
}

BinRel BinRel::intersect(BinRel const& other) const {
  BinRel r(n_);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    r.cells_[i] = cells_[i] && other.cells_[i];
  }
  return r;
}

BinRel BinRel::converse() const {
  BinRel r(n_);
  for (auto [x, y] : pairs()) r.insert(y, x);
  return r;
}

std::vector<int> BinRel::first_projection() const {
  std::vector<int> out;
  for (int x = 0; x <= n_; ++x) {
    for (int y = 0; y <= n_; ++y) {
      if (contains(x, y)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

std::vector<int> BinRel::second_projection() const {
  return converse().first_projection();
}

bool BinRel::is_subalgebra() const {
  if (!contains(0, 0) || !contains(n_, n_)) return false;
  auto const ps = pairs();
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a; b < ps.size(); ++b) {
      for (Op op : kAllOps) {
        if (!contains(apply_op(op, ps[a].first, ps[b].first, n_),
                      apply_op(op, ps[a].second, ps[b].second, n_))) {
          return false;
        }
      }
    }
  }
  return true;
}

void GoodSeq::validate() const {
  if (n < 1) throw InvalidInput("sequence needs n >= 1");
  if (static_cast<int>(y.size()) != n - 1) {
    throw InvalidInput("sequence for n = " + std::to_string(n) + " needs " +
                       std::to_string(n - 1) + " entries, got " +
                       std::to_string(y.size()));
  }
  for (int i = 1; i < n; ++i) {
    int const v = y[i - 1];
    if (v < i || v > n) {
      throw InvalidInput("malformed sequence " + to_string() + ": y_" +
                         std::to_string(i) + " must lie in [" +
                         format_value(i, n) + ", 1]");
    }
    if (i > 1 && y[i - 2] > v) {
      throw InvalidInput("malformed sequence " + to_string() +
                         ": not nondecreasing");
    }
  }
}

std::string GoodSeq::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i) s += ",";
    s += format_value(y[i], n);
  }
  return s + "]";
}

GoodSeq GoodSeq::parse(int n, std::string const& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t += c;
  }
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw InvalidInput("sequence must be written as [a,b,...]: " + text);
  }
  GoodSeq s{n, {}};
  std::string body = t.substr(1, t.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (!body.empty() && std::getline(ss, item, ',')) {
    auto const slash = item.find('/');
    try {
      if (slash == std::string::npos) {
        int const v = std::stoi(item);
        if (v != 0 && v != 1) throw InvalidInput("");
        s.y.push_back(v * n);
      } else {
        int const num = std::stoi(item.substr(0, slash));
        int const den = std::stoi(item.substr(slash + 1));
        if (den != n) throw InvalidInput("");
        s.y.push_back(num);
      }
    } catch (std::exception const&) {
      throw InvalidInput("bad sequence entry '" + item + "' for n = " +
                         std::to_string(n));
    }
  }
  s.validate();
  return s;
}

BinRel rectangle(int n, SubalgebraSquare const& s, int x, int y) {
  if (x > y || !s.first.contains(x) || !s.second.contains(y)) {
    throw InvalidInput("rectangle corner (" + format_value(x, n) + "," +
                       format_value(y, n) +
                       ") must satisfy x <= y and lie in S");
  }
  BinRel r(n);
  for (int a : s.first.carrier) {
    if (a > x) continue;
    for (int b : s.second.carrier) {
      if (b >= y) r.insert(a, b);
    }
  }
  return r;
}

BinRel rectangle(int n, int x, int y) {
  Subalgebra const all = divisor_subalgebra(n, n);
  return rectangle(n, SubalgebraSquare{all, all}, x, y);
}

bool in_union(GoodSeq const& seq, int x, int y) {
  // Among the rectangles C_{(i, y_i)} with x <= i the one at i = x has the
  // smallest y_i, since the sequence is nondecreasing.
  return y >= seq.at(x);
}

std::string GoodnessWitness::describe(int n) const {
  auto p = [n](std::pair<int, int> v) {
    return "(" + format_value(v.first, n) + "," + format_value(v.second, n) +
           ")";
  };
  return p(left) + std::string(op_symbol(op)) + p(right) + " = " + p(result);
}

GoodnessReport is_good_sequence(GoodSeq const& seq, CheckMode mode) {
  seq.validate();
  int const n = seq.n;
  std::vector<int> idx;
  for (int i = 1; i < n; ++i) {
    if (mode == CheckMode::full || seq.at(i) < seq.at(i + 1)) idx.push_back(i);
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a; b < idx.size(); ++b) {
      int const i = idx[a], j = idx[b];
      for (Op op : {Op::odot, Op::oplus}) {
        int const x = apply_op(op, i, j, n);
        int const y = apply_op(op, seq.at(i), seq.at(j), n);
        if (!in_union(seq, x, y)) {
          return {false, GoodnessWitness{i, j, op, {i, seq.at(i)},
                                         {j, seq.at(j)}, {x, y}}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

void extend(int n, int i, std::vector<int>& prefix, std::vector<GoodSeq>& out) {
  if (i == n) {
    out.push_back(GoodSeq{n, prefix});
    return;
  }
  int const lo = std::max(i, prefix.empty() ? 0 : prefix.back());
  for (int v = n; v >= lo; --v) {
    prefix.push_back(v);
    extend(n, i + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<GoodSeq> candidate_sequences(int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  std::vector<GoodSeq> out;
  std::vector<int> prefix;
  extend(n, 1, prefix, out);
  return out;
}

BinRel seq_to_rel(GoodSeq const& seq) {
  seq.validate();
  BinRel r(seq.n);
  for (int x = 0; x <= seq.n; ++x)
    for (int y = seq.at(x); y <= seq.n; ++y) r.insert(x, y);
  return r;
}

GoodSeq rel_to_seq(BinRel const& r) {
  int const n = r.n();
  if (!BinRel::triangle(n).subset_of(r)) {
    throw InvalidInput("relation does not contain the triangle relation");
  }
  if (!r.subset_of(BinRel::leq(n))) {
    throw InvalidInput("relation is not contained in the order");
  }
  GoodSeq s{n, {}};
  for (int i = 1; i < n; ++i) {
    int y = i;
    while (!r.contains(i, y)) ++y;
    s.y.push_back(y);
  }
  if (seq_to_rel(s) != r) {
    throw InvalidInput("relation is not a union of rectangles");
  }
  return s;
}

bool RelLattice::leq(int a, int b) const {
  auto const& ya = elements[a].y;
  auto const& yb = elements[b].y;
  for (std::size_t i = 0; i < ya.size(); ++i) {
    if (yb[i] > ya[i]) return false;
  }
  return true;
}

std::optional<int> RelLattice::find(GoodSeq const& s) const {
  for (int i = 0; i < size(); ++i) {
    if (elements[i] == s) return i;
  }
  return std::nullopt;
}

std::vector<int> RelLattice::upper_covers(int a) const {
  std::vector<int> out;
  for (auto [lo, hi] : covers) {
    if (lo == a) out.push_back(hi);
  }
  return out;
}

RelLattice compute_Sn(int n) {
  RelLattice l;
  l.n = n;
  for (auto& s : candidate_sequences(n)) {
    if (is_good_sequence(s, CheckMode::corner).good) {
      l.elements.push_back(std::move(s));
    }
  }
  int const m = l.size();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b || !l.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < m && cover; ++c) {
        if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) cover = false;
      }
      if (cover) l.covers.emplace_back(a, b);
    }
  }
  std::sort(l.covers.begin(), l.covers.end());
  for (int a = 0; a < m; ++a) {
    bool is_bottom = true, is_top = true;
    for (int b = 0; b < m; ++b) {
      is_bottom = is_bottom && l.leq(a, b);
      is_top = is_top && l.leq(b, a);
    }
    if (is_bottom) l.bottom = a;
    if (is_top) l.top = a;
  }
  l.meet_irreducible.resize(m);
  for (int a = 0; a < m; ++a) {
    l.meet_irreducible[a] = a == l.top || l.upper_covers(a).size() == 1;
  }
  return l;
}

RelLattice const& relation_lattice(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<RelLattice const>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<RelLattice const>(compute_Sn(n));
  return *slot;
}

std::vector<GoodSeq> meet_irreducibles(RelLattice const& l) {
  std::vector<GoodSeq> out;
  for (int a = 0; a < l.size(); ++a) {
    if (l.meet_irreducible[a]) out.push_back(l.elements[a]);
  }
  return out;
}

std::string to_dot(RelLattice const& l) {
  std::ostringstream os;
  os << "digraph S" << l.n << " {\n  rankdir=BT;\n";
  for (int a = 0; a < l.size(); ++a) {
    os << "  n" << a << " [label=\"" << l.elements[a].to_string()
       << "\", style=" << (l.meet_irreducible[a] ? "solid" : "dashed")
       << "];\n";
  }
  for (auto [lo, hi] : l.covers) {
    os << "  n" << lo << " -> n" << hi << " [arrowhead=none];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pmv
