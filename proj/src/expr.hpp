#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace causet {

struct SourceLoc {
  int line = 0;
  int column = 0;
};

enum class ExprKind {
  Constant,
  Variable,
  Max,
  Min,
  Add,
  Sub,
  Mul,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  And,
  Or,
  Not,
  If,
};

/// Mechanism bodies: a small total expression language over integer-valued
/// variables. Comparisons yield 1/0; and/or are min/max; not e = 1-(e!=0);
/// if(c,a,b) treats any nonzero condition as true.
struct Expr {
  ExprKind kind = ExprKind::Constant;
  std::int64_t value = 0;   // Constant only
  std::string var;          // Variable only
  std::vector<Expr> args;   // operands, arity per kind
  SourceLoc loc;

  static Expr constant(std::int64_t v);
  static Expr variable(std::string name);
  static Expr make(ExprKind kind, std::vector<Expr> operands);

  bool operator==(const Expr& other) const;  // structural; ignores loc
};

using Env = std::map<std::string, std::int64_t>;

/// Evaluates with exact 64-bit arithmetic. Throws Error(UnboundVariable)
/// naming the variable if env lacks a referenced binding.
std::int64_t eval_expression(const Expr& expr, const Env& env);

/// The set of variable names occurring syntactically in the tree.
std::set<std::string> free_variables(const Expr& expr);

/// Concrete syntax rendering with minimal parentheses.
std::string to_string(const Expr& expr);

}  // namespace causet
