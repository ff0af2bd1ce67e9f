#include "pmv/io.hpp"

#include <fstream>
#include <sstream>

namespace pmv {

Json parse_json(std::string const& text) {
  try {
    return Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    int line = 1, column = 1;
    std::size_t const stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    auto const colon = what.find("syntax error");
    throw ParseError(line, column,
                     colon == std::string::npos ? what : what.substr(colon));
  }
}

Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

namespace {

template <class T>
T field(Json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (nlohmann::json::exception const&) {
    throw InvalidInput(std::string("field \"") + key + "\" has the wrong type");
  }
}

Json pair_list(std::vector<std::pair<int, int>> const& ps) {
  Json a = Json::array();
  for (auto [x, y] : ps) a.push_back({x, y});
  return a;
}

std::vector<std::pair<int, int>> pairs_from(Json const& j, char const* what) {
  try {
    return j.get<std::vector<std::pair<int, int>>>();
  } catch (nlohmann::json::exception const&) {
    throw InvalidInput(std::string(what) + " must be a list of [i, j] pairs");
  }
}

}  // namespace

Json to_json(Chain const& c) { return {{"n", c.n()}}; }

Json to_json(Subalgebra const& s) {
  return {{"n", s.n}, {"carrier", s.carrier}};
}

Json to_json(FinAlgebra const& a) {
  Json j;
  j["size"] = a.size();
  int const m = a.size();
  for (Op op : kAllOps) {
    Json rows = Json::array();
    for (int x = 0; x < m; ++x) {
      Json row = Json::array();
      for (int y = 0; y < m; ++y) row.push_back(a.apply(op, x, y));
      rows.push_back(std::move(row));
    }
    j[std::string(op_name(op))] = std::move(rows);
  }
  j["zero"] = a.zero();
  j["one"] = a.one();
  j["label"] = a.label();
  return j;
}

Json to_json(Hom const& h) { return {{"map", h.map}}; }

Json to_json(GoodSeq const& s) { return {{"n", s.n}, {"y", s.y}}; }

Json to_json(RelLattice const& l) {
  Json elems = Json::array();
  for (int i = 0; i < l.size(); ++i) {
    Json e = to_json(l.elements[i]);
    e["label"] = l.elements[i].to_string();
    e["meet_irreducible"] = static_cast<bool>(l.meet_irreducible[i]);
    elems.push_back(std::move(e));
  }
  return {{"n", l.n},
          {"elements", std::move(elems)},
          {"covers", pair_list(l.covers)},
          {"bottom", l.bottom},
          {"top", l.top}};
}

Json to_json(StructSpace const& x) {
  Json rels = Json::object();
  for (int r = 0; r < x.relation_count(); ++r) {
    rels[x.lattice().elements[r].to_string()] = pair_list(x.pairs(r));
  }
  return {{"n", x.n()}, {"size", x.size()}, {"relations", std::move(rels)}};
}

Json to_json(Poset const& p) {
  return {{"size", p.size}, {"leq", pair_list(p.pairs())}};
}

Json to_json(ClosureReport const& r) {
  Json j{{"verdict", r.verdict},
         {"reason", std::string(reason_name(r.reason))},
         {"detail", r.detail},
         {"degenerate", r.degenerate}};
  if (r.witness) {
    j["witness"] = {{"z", to_json(r.witness->z)},
                    {"y", to_json(r.witness->y)},
                    {"phi", r.witness->phi},
                    {"psi", r.witness->psi}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Chain chain_from_json(Json const& j) { return Chain(field<int>(j, "n")); }

Subalgebra subalgebra_from_json(Json const& j) {
  Subalgebra s{field<int>(j, "n"), field<std::vector<int>>(j, "carrier")};
  Chain const c(s.n);
  for (int v : s.carrier) c.check({v});
  if (!std::is_sorted(s.carrier.begin(), s.carrier.end()) ||
      !is_closed_subset(s.n, s.carrier)) {
    throw InvalidInput("carrier is not a sorted subuniverse of the chain");
  }
  return s;
}

FinAlgebra algebra_from_json(Json const& j) {
  int const m = field<int>(j, "size");
  if (m < 1) throw InvalidInput("size must be >= 1");
  std::array<FinAlgebra::Table, 4> tables;
  for (Op op : kAllOps) {
    auto const rows =
        field<std::vector<std::vector<int>>>(j, std::string(op_name(op)).c_str());
    if (static_cast<int>(rows.size()) != m) {
      throw InvalidInput("table " + std::string(op_name(op)) + " needs " +
                         std::to_string(m) + " rows");
    }
    auto& t = tables[static_cast<std::size_t>(op)];
    for (auto const& row : rows) {
      if (static_cast<int>(row.size()) != m) {
        throw InvalidInput("table " + std::string(op_name(op)) +
                           " has a row of the wrong length");
      }
      t.insert(t.end(), row.begin(), row.end());
    }
  }
  std::string label = j.contains("label") ? field<std::string>(j, "label") : "";
  return FinAlgebra::from_tables(m, std::move(tables), field<int>(j, "zero"),
                                 field<int>(j, "one"), std::move(label));
}

Hom hom_from_json(Json const& j) {
  return Hom{field<std::vector<int>>(j, "map")};
}

GoodSeq goodseq_from_json(Json const& j) {
  GoodSeq s{field<int>(j, "n"), field<std::vector<int>>(j, "y")};
  s.validate();
  return s;
}

StructSpace space_from_json(Json const& j) {
  int const n = field<int>(j, "n");
  if (n < 1) throw InvalidInput("n must be >= 1");
  StructSpace x(n, field<int>(j, "size"));
  if (!j.contains("relations") || !j["relations"].is_object()) {
    throw InvalidInput("missing object \"relations\"");
  }
  for (auto const& [key, value] : j["relations"].items()) {
    int const r = x.relation_index(GoodSeq::parse(n, key));
    for (auto [u, v] : pairs_from(value, "relation")) x.set(r, u, v);
  }
  return x;
}

Poset poset_from_json(Json const& j) {
  Poset p(field<int>(j, "size"));
  if (p.size < 0) throw InvalidInput("size must be >= 0");
  if (!j.contains("leq")) throw InvalidInput("missing field \"leq\"");
  for (auto [u, v] : pairs_from(j["leq"], "leq")) {
    if (u < 0 || v < 0 || u >= p.size || v >= p.size) {
      throw InvalidElement("leq pair outside the carrier");
    }
    p.set(u, v);
  }
  p.validate();
  return p;
}

std::string to_dot(Poset const& p) {
  std::ostringstream os;
  os << "digraph P {\n  rankdir=BT;\n";
  for (int v = 0; v < p.size; ++v) os << "  p" << v << ";\n";
  for (auto [u, v] : p.covers()) {
    os << "  p" << u << " -> p" << v << " [arrowhead=none];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(FinAlgebra const& a) {
  std::ostringstream os;
  os << "digraph A {\n  rankdir=BT;\n";
  for (int v = 0; v < a.size(); ++v) {
    os << "  a" << v << " [label=\"" << a.name(v) << "\"];\n";
  }
  for (int u = 0; u < a.size(); ++u) {
    for (int v = 0; v < a.size(); ++v) {
      if (u == v || !a.leq(u, v)) continue;
      bool cover = true;
      for (int w = 0; w < a.size() && cover; ++w) {
        if (w != u && w != v && a.leq(u, w) && a.leq(w, v)) cover = false;
      }
      if (cover) os << "  a" << u << " -> a" << v << " [arrowhead=none];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace pmv
