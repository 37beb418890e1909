#include "expr.hpp"

#include <utility>

#include "errors.hpp"

namespace causet {

Expr Expr::constant(std::int64_t v) {
  Expr e;
  e.kind = ExprKind::Constant;
  e.value = v;
  return e;
}

Expr Expr::variable(std::string name) {
  Expr e;
  e.kind = ExprKind::Variable;
  e.var = std::move(name);
  return e;
}

Expr Expr::make(ExprKind kind, std::vector<Expr> operands) {
  Expr e;
  e.kind = kind;
  e.args = std::move(operands);
  return e;
}

bool Expr::operator==(const Expr& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case ExprKind::Constant:
      return value == other.value;
    case ExprKind::Variable:
      return var == other.var;
    default:
      return args == other.args;
  }
}

std::int64_t eval_expression(const Expr& expr, const Env& env) {
  switch (expr.kind) {
    case ExprKind::Constant:
      return expr.value;
    case ExprKind::Variable: {
      auto it = env.find(expr.var);
      if (it == env.end()) {
        throw Error(ErrorKind::UnboundVariable,
                    "unbound variable '" + expr.var + "'");
      }
      return it->second;
    }
    case ExprKind::Not: {
      std::int64_t a = eval_expression(expr.args[0], env);
      return a != 0 ? 0 : 1;
    }
    case ExprKind::If: {
      std::int64_t c = eval_expression(expr.args[0], env);
      return eval_expression(expr.args[c != 0 ? 1 : 2], env);
    }
    default:
      break;
  }
  std::int64_t a = eval_expression(expr.args[0], env);
  std::int64_t b = eval_expression(expr.args[1], env);
  switch (expr.kind) {
    case ExprKind::Max:
    case ExprKind::Or:
      return a > b ? a : b;
    case ExprKind::Min:
    case ExprKind::And:
      return a < b ? a : b;
    case ExprKind::Add:
      return a + b;
    case ExprKind::Sub:
      return a - b;
    case ExprKind::Mul:
      return a * b;
    case ExprKind::Eq:
      return a == b ? 1 : 0;
    case ExprKind::Ne:
      return a != b ? 1 : 0;
    case ExprKind::Lt:
      return a < b ? 1 : 0;
    case ExprKind::Le:
      return a <= b ? 1 : 0;
    case ExprKind::Gt:
      return a > b ? 1 : 0;
    case ExprKind::Ge:
      return a >= b ? 1 : 0;
    default:
      throw Error(ErrorKind::Structural, "malformed expression node");
  }
}

namespace {

void collect_vars(const Expr& e, std::set<std::string>& out) {
  if (e.kind == ExprKind::Variable) {
    out.insert(e.var);
    return;
  }
  for (const Expr& a : e.args) collect_vars(a, out);
}

// Higher number binds tighter.
int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::Or:
      return 1;
    case ExprKind::And:
      return 2;
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge:
      return 3;
    case ExprKind::Add:
    case ExprKind::Sub:
      return 4;
    case ExprKind::Mul:
      return 5;
    case ExprKind::Not:
      return 6;
    default:
      return 7;  // atoms and call syntax
  }
}

const char* op_text(ExprKind k) {
  switch (k) {
    case ExprKind::Add:
      return " + ";
    case ExprKind::Sub:
      return " - ";
    case ExprKind::Mul:
      return " * ";
    case ExprKind::Eq:
      return " = ";
    case ExprKind::Ne:
      return " != ";
    case ExprKind::Lt:
      return " < ";
    case ExprKind::Le:
      return " <= ";
    case ExprKind::Gt:
      return " > ";
    case ExprKind::Ge:
      return " >= ";
    case ExprKind::And:
      return " & ";
    case ExprKind::Or:
      return " | ";
    default:
      return "";
  }
}

void print_expr(const Expr& e, int parent_prec, std::string& out) {
  int prec = precedence(e.kind);
  switch (e.kind) {
    case ExprKind::Constant:
      out += std::to_string(e.value);
      return;
    case ExprKind::Variable:
      out += e.var;
      return;
    case ExprKind::Max:
    case ExprKind::Min:
      out += e.kind == ExprKind::Max ? "max(" : "min(";
      print_expr(e.args[0], 0, out);
      out += ", ";
      print_expr(e.args[1], 0, out);
      out += ")";
      return;
    case ExprKind::If:
      out += "if(";
      print_expr(e.args[0], 0, out);
      out += ", ";
      print_expr(e.args[1], 0, out);
      out += ", ";
      print_expr(e.args[2], 0, out);
      out += ")";
      return;
    case ExprKind::Not:
      out += "!";
      print_expr(e.args[0], prec, out);
      return;
    default:
      break;
  }
  bool need_parens = prec <= parent_prec;
  if (need_parens) out += "(";
  // Left-associative, except comparisons do not chain.
  bool comparison = prec == 3;
  print_expr(e.args[0], comparison ? prec : prec - 1, out);
  out += op_text(e.kind);
  print_expr(e.args[1], prec, out);
  if (need_parens) out += ")";
}

}  // namespace

std::set<std::string> free_variables(const Expr& expr) {
  std::set<std::string> out;
  collect_vars(expr, out);
  return out;
}

std::string to_string(const Expr& expr) {
  std::string out;
  print_expr(expr, 0, out);
  return out;
}

}  // namespace causet
