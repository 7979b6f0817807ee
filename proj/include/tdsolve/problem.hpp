#ifndef TDSOLVE_PROBLEM_HPP
#define TDSOLVE_PROBLEM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tdsolve/core.hpp"

namespace tdsolve {

// Problem expressions:
//   expr := any | edgeless | atmost(INT) | forest | tree
//         | and(expr,...) | or(expr,...)
//         | vertpart(expr, expr,...) | edgepart(expr, expr,...)
//         | graphpart(INT; expr,...)
// vertpart and edgepart take at least two parts.
struct ProblemExpr {
  enum class Op {
    Any,
    Edgeless,
    AtMost,
    Forest,
    Tree,
    And,
    Or,
    VertPart,
    EdgePart,
    GraphPart
  };
  Op op = Op::Any;
  int number = 0;  // atmost bound or graphpart budget
  std::vector<ProblemExpr> args;

  bool operator==(const ProblemExpr&) const = default;
};

// Throws std::runtime_error naming the offending position on bad input.
ProblemExpr parse_problem(const std::string& text);

// Canonical text form; parses back to an equal expression.
std::string to_string(const ProblemExpr& e);

std::unique_ptr<DynamicCore> build_core(const ProblemExpr& e);

// Shorthand names accepted by the command line: "3col", "vc=<k>",
// "two-trees", "arb=<l>". Returns nullopt for unknown names; throws if a
// known prefix has a malformed parameter.
std::optional<ProblemExpr> preset_problem(const std::string& name);

}  // namespace tdsolve

#endif
