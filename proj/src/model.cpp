#include "model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "errors.hpp"

namespace causet {

int CausalModel::index_of(const std::string& var) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name == var) return static_cast<int>(i);
  }
  return -1;
}

const Variable* CausalModel::find(const std::string& var) const {
  int i = index_of(var);
  return i < 0 ? nullptr : &variables[i];
}

const Mechanism* CausalModel::mechanism_for(const std::string& var) const {
  for (const Mechanism& m : mechanisms) {
    if (m.target == var) return &m;
  }
  return nullptr;
}

bool CausalModel::in_range(const std::string& var, std::int64_t value) const {
  const Variable* v = find(var);
  if (v == nullptr) return false;
  return std::binary_search(v->range.begin(), v->range.end(), value);
}

std::vector<std::string> CausalModel::exogenous_names() const {
  std::vector<std::string> out;
  for (const Variable& v : variables) {
    if (v.kind == VarKind::Exogenous) out.push_back(v.name);
  }
  return out;
}

std::vector<std::string> CausalModel::endogenous_names() const {
  std::vector<std::string> out;
  for (const Variable& v : variables) {
    if (v.kind == VarKind::Endogenous) out.push_back(v.name);
  }
  return out;
}

bool CausalModel::operator==(const CausalModel& other) const {
  if (name != other.name || variables.size() != other.variables.size() ||
      mechanisms.size() != other.mechanisms.size()) {
    return false;
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    const Variable& a = variables[i];
    const Variable& b = other.variables[i];
    if (a.name != b.name || a.range != b.range || a.kind != b.kind) {
      return false;
    }
  }
  for (std::size_t i = 0; i < mechanisms.size(); ++i) {
    if (mechanisms[i].target != other.mechanisms[i].target ||
        !(mechanisms[i].body == other.mechanisms[i].body)) {
      return false;
    }
  }
  return true;
}

const char* violation_kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::NoEndogenous:
      return "no-endogenous";
    case Violation::Kind::BadIdentifier:
      return "bad-identifier";
    case Violation::Kind::DuplicateId:
      return "duplicate-id";
    case Violation::Kind::EmptyRange:
      return "empty-range";
    case Violation::Kind::DuplicateRangeValue:
      return "duplicate-range-value";
    case Violation::Kind::MissingMechanism:
      return "missing-mechanism";
    case Violation::Kind::ExtraMechanism:
      return "extra-mechanism";
    case Violation::Kind::DuplicateMechanism:
      return "duplicate-mechanism";
    case Violation::Kind::UnknownReference:
      return "unknown-reference";
    case Violation::Kind::OutOfRangeMechanism:
      return "out-of-range";
    case Violation::Kind::Cycle:
      return "cycle";
    case Violation::Kind::TotalityUnverified:
      return "totality-unverified";
  }
  return "unknown";
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// Iterates fn over every assignment of the named variables to values from
// their ranges, in lexicographic order. Returns false (without calling fn)
// if the product exceeds cap.
bool for_each_assignment(
    const CausalModel& model, const std::vector<std::string>& vars,
    std::size_t cap, const std::function<bool(const Env&)>& fn) {
  std::size_t total = 1;
  for (const std::string& v : vars) {
    const Variable* var = model.find(v);
    std::size_t n = var != nullptr ? var->range.size() : 1;
    if (n == 0) return true;
    if (total > cap / std::max<std::size_t>(n, 1)) return false;
    total *= n;
  }
  Env env;
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      env[vars[i]] = model.find(vars[i])->range[idx[i]];
    }
    if (!fn(env)) return true;
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++idx[i] < model.find(vars[i])->range.size()) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
    if (vars.empty()) return true;
  }
}

// DFS cycle search over endogenous dependency edges; returns a cycle path
// (first == last) if one exists.
std::optional<std::vector<std::string>> find_cycle(const CausalModel& model) {
  std::map<std::string, std::vector<std::string>> out_edges;
  for (const Mechanism& m : model.mechanisms) {
    for (const std::string& ref : free_variables(m.body)) {
      const Variable* v = model.find(ref);
      if (v != nullptr && v->kind == VarKind::Endogenous) {
        out_edges[ref].push_back(m.target);
      }
    }
  }
  std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::optional<std::vector<std::string>> cycle;

  std::function<bool(const std::string&)> visit =
      [&](const std::string& node) -> bool {
    state[node] = 1;
    stack.push_back(node);
    for (const std::string& next : out_edges[node]) {
      int s = state[next];
      if (s == 1) {
        auto it = std::find(stack.begin(), stack.end(), next);
        std::vector<std::string> path(it, stack.end());
        path.push_back(next);
        cycle = path;
        return true;
      }
      if (s == 0 && visit(next)) return true;
    }
    stack.pop_back();
    state[node] = 2;
    return false;
  };

  for (const Variable& v : model.variables) {
    if (v.kind == VarKind::Endogenous && state[v.name] == 0) {
      if (visit(v.name)) break;
    }
  }
  return cycle;
}

}  // namespace

std::vector<Violation> validate_model(const CausalModel& model,
                                      std::size_t totality_cap) {
  std::vector<Violation> report;
  auto add = [&](Violation v) { report.push_back(std::move(v)); };

  bool any_endogenous = false;
  std::set<std::string> seen;
  for (const Variable& v : model.variables) {
    if (v.kind == VarKind::Endogenous) any_endogenous = true;
    if (!valid_identifier(v.name)) {
      add({Violation::Kind::BadIdentifier, v.name,
           "'" + v.name + "' is not a valid identifier"});
    }
    if (!seen.insert(v.name).second) {
      add({Violation::Kind::DuplicateId, v.name,
           "variable '" + v.name + "' declared more than once"});
    }
    if (v.range.empty()) {
      add({Violation::Kind::EmptyRange, v.name,
           "variable '" + v.name + "' has an empty range"});
    }
    for (std::size_t i = 1; i < v.range.size(); ++i) {
      if (v.range[i] == v.range[i - 1]) {
        add({Violation::Kind::DuplicateRangeValue, v.name,
             "range of '" + v.name + "' repeats value " +
                 std::to_string(v.range[i])});
        break;
      }
    }
  }
  if (!any_endogenous) {
    add({Violation::Kind::NoEndogenous, "",
         "model declares no endogenous variable"});
  }

  std::set<std::string> mechanism_targets;
  for (const Mechanism& m : model.mechanisms) {
    const Variable* target = model.find(m.target);
    if (target == nullptr) {
      add({Violation::Kind::ExtraMechanism, m.target,
           "equation for undeclared variable '" + m.target + "'"});
      continue;
    }
    if (target->kind == VarKind::Exogenous) {
      add({Violation::Kind::ExtraMechanism, m.target,
           "equation for exogenous variable '" + m.target + "'"});
      continue;
    }
    if (!mechanism_targets.insert(m.target).second) {
      add({Violation::Kind::DuplicateMechanism, m.target,
           "more than one equation for '" + m.target + "'"});
      continue;
    }
    bool refs_ok = true;
    for (const std::string& ref : free_variables(m.body)) {
      if (model.find(ref) == nullptr) {
        add({Violation::Kind::UnknownReference, m.target,
             "equation for '" + m.target + "' references undeclared variable '" +
                 ref + "'"});
        refs_ok = false;
      }
    }
    if (!refs_ok || target->range.empty()) continue;

    std::set<std::string> ref_set = free_variables(m.body);
    std::vector<std::string> refs(ref_set.begin(), ref_set.end());
    // Declaration order for the totality witness, for determinism.
    std::sort(refs.begin(), refs.end(), [&](const auto& a, const auto& b) {
      return model.index_of(a) < model.index_of(b);
    });
    bool range_ok = true;
    Env bad_input;
    std::int64_t bad_output = 0;
    bool enumerated = for_each_assignment(
        model, refs, totality_cap, [&](const Env& env) {
          std::int64_t result = eval_expression(m.body, env);
          if (!model.in_range(m.target, result)) {
            range_ok = false;
            bad_input = env;
            bad_output = result;
            return false;
          }
          return true;
        });
    if (!enumerated) {
      Violation v{Violation::Kind::TotalityUnverified, m.target,
                  "totality unverified: input space of '" + m.target +
                      "' exceeds the enumeration cap"};
      add(std::move(v));
    } else if (!range_ok) {
      Violation v{Violation::Kind::OutOfRangeMechanism, m.target,
                  "equation for '" + m.target + "' yields out-of-range value " +
                      std::to_string(bad_output)};
      v.witness = bad_input;
      add(std::move(v));
    }
  }

  for (const Variable& v : model.variables) {
    if (v.kind == VarKind::Endogenous &&
        mechanism_targets.find(v.name) == mechanism_targets.end()) {
      add({Violation::Kind::MissingMechanism, v.name,
           "no equation for endogenous variable '" + v.name + "'"});
    }
  }

  if (auto cycle = find_cycle(model)) {
    Violation v{Violation::Kind::Cycle, cycle->front(), ""};
    std::string path;
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      if (i > 0) path += " -> ";
      path += (*cycle)[i];
    }
    v.message = "dependency cycle: " + path;
    v.cycle = *cycle;
    add(std::move(v));
  }

  return report;
}

std::vector<std::pair<std::string, std::string>> dependency_graph(
    const CausalModel& model) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Mechanism& m : model.mechanisms) {
    for (const std::string& ref : free_variables(m.body)) {
      if (model.find(ref) != nullptr) edges.emplace_back(ref, m.target);
    }
  }
  std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
    int ai = model.index_of(a.first), bi = model.index_of(b.first);
    if (ai != bi) return ai < bi;
    return model.index_of(a.second) < model.index_of(b.second);
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::string> topological_order(const CausalModel& model) {
  std::vector<std::string> endo = model.endogenous_names();
  std::map<std::string, std::set<std::string>> pending;  // target -> endo deps
  for (const std::string& name : endo) {
    const Mechanism* m = model.mechanism_for(name);
    std::set<std::string> deps;
    if (m != nullptr) {
      for (const std::string& ref : free_variables(m->body)) {
        const Variable* v = model.find(ref);
        if (v != nullptr && v->kind == VarKind::Endogenous) deps.insert(ref);
      }
    }
    pending[name] = std::move(deps);
  }

  std::vector<std::string> order;
  std::set<std::string> emitted;
  while (order.size() < endo.size()) {
    bool progressed = false;
    for (const std::string& name : endo) {  // declaration order tie-break
      if (emitted.count(name)) continue;
      bool ready = true;
      for (const std::string& dep : pending[name]) {
        if (!emitted.count(dep)) {
          ready = false;
          break;
        }
      }
      if (ready) {
        order.push_back(name);
        emitted.insert(name);
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      throw Error(ErrorKind::InvalidModel,
                  "dependency cycle among endogenous variables");
    }
  }
  return order;
}

}  // namespace causet
