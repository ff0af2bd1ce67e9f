#pragma once

#include <json.hpp>
#include <string>

#include "pmv/algebra.hpp"
#include "pmv/chain.hpp"
#include "pmv/closure.hpp"
#include "pmv/order_subalgebras.hpp"
#include "pmv/skeleton.hpp"
#include "pmv/space.hpp"

namespace pmv {

using Json = nlohmann::ordered_json;

/// Malformed JSON text, with the 1-based position of the failure.
class ParseError : public InvalidInput {
 public:
  ParseError(int line, int column, std::string const& what)
      : InvalidInput("JSON parse error at line " + std::to_string(line) +
                     ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

Json parse_json(std::string const& text);
Json read_json_file(std::string const& path);

Json to_json(Chain const& c);
Json to_json(Subalgebra const& s);
Json to_json(FinAlgebra const& a);
Json to_json(Hom const& h);
Json to_json(GoodSeq const& s);
Json to_json(RelLattice const& l);
Json to_json(StructSpace const& x);
Json to_json(Poset const& p);
Json to_json(ClosureReport const& r);

Chain chain_from_json(Json const& j);
Subalgebra subalgebra_from_json(Json const& j);
FinAlgebra algebra_from_json(Json const& j);
Hom hom_from_json(Json const& j);
GoodSeq goodseq_from_json(Json const& j);
StructSpace space_from_json(Json const& j);
Poset poset_from_json(Json const& j);

/// Hasse diagrams: the lattice order of an algebra and a poset.
std::string to_dot(FinAlgebra const& a);
std::string to_dot(Poset const& p);

}  // namespace pmv
