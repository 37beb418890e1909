#include "semantics.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace causet {

BoolFormula BoolFormula::leaf(std::string var, std::int64_t value) {
  BoolFormula f;
  f.kind = Kind::Event;
  f.event = {std::move(var), value};
  return f;
}

BoolFormula BoolFormula::make(Kind kind, std::vector<BoolFormula> children) {
  BoolFormula f;
  f.kind = kind;
  f.children = std::move(children);
  return f;
}

namespace {

void print_formula(const BoolFormula& f, int parent_prec, std::string& out) {
  switch (f.kind) {
    case BoolFormula::Kind::Event:
      out += f.event.var + " = " + std::to_string(f.event.value);
      return;
    case BoolFormula::Kind::Not:
      out += "!";
      if (f.children[0].kind == BoolFormula::Kind::Event) {
        out += "(";
        print_formula(f.children[0], 0, out);
        out += ")";
      } else {
        print_formula(f.children[0], 3, out);
      }
      return;
    case BoolFormula::Kind::And:
    case BoolFormula::Kind::Or: {
      int prec = f.kind == BoolFormula::Kind::And ? 2 : 1;
      bool parens = prec <= parent_prec || parent_prec == 3;
      if (parens) out += "(";
      print_formula(f.children[0], prec - 1, out);
      out += f.kind == BoolFormula::Kind::And ? " & " : " | ";
      print_formula(f.children[1], prec, out);
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

std::string to_string(const BoolFormula& formula) {
  std::string out;
  print_formula(formula, 0, out);
  return out;
}

std::string to_string(const CausalFormula& formula) {
  std::string out;
  if (!formula.interventions.empty()) {
    out += "[";
    for (std::size_t i = 0; i < formula.interventions.size(); ++i) {
      if (i > 0) out += ", ";
      out += formula.interventions[i].first + " <- " +
             std::to_string(formula.interventions[i].second);
    }
    out += "](";
    print_formula(formula.body, 0, out);
    out += ")";
  } else {
    print_formula(formula.body, 0, out);
  }
  return out;
}

void check_formula(const CausalModel& model, const BoolFormula& formula,
                   bool endogenous_only) {
  if (formula.kind == BoolFormula::Kind::Event) {
    const Variable* v = model.find(formula.event.var);
    if (v == nullptr) {
      throw Error(ErrorKind::UnknownVariable,
                  "unknown variable '" + formula.event.var + "' in formula");
    }
    if (endogenous_only && v->kind == VarKind::Exogenous) {
      throw Error(ErrorKind::UnknownVariable,
                  "primitive event over exogenous variable '" +
                      formula.event.var + "'");
    }
    if (!model.in_range(formula.event.var, formula.event.value)) {
      throw Error(ErrorKind::OutOfRange,
                  "value " + std::to_string(formula.event.value) +
                      " is outside the range of '" + formula.event.var + "'");
    }
    return;
  }
  for (const BoolFormula& c : formula.children) {
    check_formula(model, c, endogenous_only);
  }
}

bool eval_formula(const BoolFormula& formula, const World& world) {
  switch (formula.kind) {
    case BoolFormula::Kind::Event: {
      auto it = world.find(formula.event.var);
      if (it == world.end()) {
        throw Error(ErrorKind::UnboundVariable,
                    "world does not assign '" + formula.event.var + "'");
      }
      return it->second == formula.event.value;
    }
    case BoolFormula::Kind::And:
      return eval_formula(formula.children[0], world) &&
             eval_formula(formula.children[1], world);
    case BoolFormula::Kind::Or:
      return eval_formula(formula.children[0], world) ||
             eval_formula(formula.children[1], world);
    case BoolFormula::Kind::Not:
      return !eval_formula(formula.children[0], world);
  }
  return false;
}

CausalModel intervene(
    const CausalModel& model,
    const std::vector<std::pair<std::string, std::int64_t>>& settings) {
  std::set<std::string> seen;
  for (const auto& [var, value] : settings) {
    const Variable* v = model.find(var);
    if (v == nullptr) {
      throw Error(ErrorKind::UnknownVariable,
                  "cannot intervene on unknown variable '" + var + "'");
    }
    if (v->kind == VarKind::Exogenous) {
      throw Error(ErrorKind::Precondition,
                  "cannot intervene on exogenous variable '" + var + "'");
    }
    if (!model.in_range(var, value)) {
      throw Error(ErrorKind::OutOfRange,
                  "intervention value " + std::to_string(value) +
                      " is outside the range of '" + var + "'");
    }
    if (!seen.insert(var).second) {
      throw Error(ErrorKind::DuplicateVariable,
                  "duplicate intervention variable '" + var + "'");
    }
  }
  CausalModel result = model;
  for (const auto& [var, value] : settings) {
    for (Mechanism& m : result.mechanisms) {
      if (m.target == var) {
        m.body = Expr::constant(value);
        break;
      }
    }
  }
  return result;
}

World solve(const CausalModel& model, const Context& context) {
  World world;
  for (const Variable& v : model.variables) {
    if (v.kind != VarKind::Exogenous) continue;
    auto it = context.find(v.name);
    if (it == context.end()) {
      throw Error(ErrorKind::Precondition,
                  "context does not set exogenous variable '" + v.name + "'");
    }
    if (!model.in_range(v.name, it->second)) {
      throw Error(ErrorKind::OutOfRange,
                  "context value " + std::to_string(it->second) +
                      " is outside the range of '" + v.name + "'");
    }
    world[v.name] = it->second;
  }
  for (const auto& [var, value] : context) {
    const Variable* v = model.find(var);
    if (v == nullptr || v->kind != VarKind::Exogenous) {
      throw Error(ErrorKind::Precondition,
                  "context sets non-exogenous variable '" + var + "'");
    }
    (void)value;
  }
  for (const std::string& name : topological_order(model)) {
    const Mechanism* m = model.mechanism_for(name);
    if (m == nullptr) {
      throw Error(ErrorKind::InvalidModel,
                  "no equation for endogenous variable '" + name + "'");
    }
    world[name] = eval_expression(m->body, world);
  }
  return world;
}

bool satisfies(const CausalModel& model, const Context& context,
               const CausalFormula& formula) {
  check_formula(model, formula.body, /*endogenous_only=*/false);
  const CausalModel* target = &model;
  CausalModel surgered;
  if (!formula.interventions.empty()) {
    surgered = intervene(model, formula.interventions);
    target = &surgered;
  }
  return eval_formula(formula.body, solve(*target, context));
}

bool satisfies_all_contexts(const CausalModel& model,
                            const CausalFormula& formula, std::size_t cap) {
  std::vector<std::string> exo = model.exogenous_names();
  std::size_t total = 1;
  for (const std::string& name : exo) {
    std::size_t n = model.find(name)->range.size();
    if (n == 0) return true;
    if (total > cap / n) {
      throw Error(ErrorKind::SearchSpaceExceeded,
                  "context space too large to enumerate");
    }
    total *= n;
  }
  std::vector<std::size_t> idx(exo.size(), 0);
  for (;;) {
    Context context;
    for (std::size_t i = 0; i < exo.size(); ++i) {
      context[exo[i]] = model.find(exo[i])->range[idx[i]];
    }
    if (!satisfies(model, context, formula)) return false;
    std::size_t i = exo.size();
    for (;;) {
      if (i == 0) return true;
      --i;
      if (++idx[i] < model.find(exo[i])->range.size()) break;
      idx[i] = 0;
    }
  }
}

}  // namespace causet
