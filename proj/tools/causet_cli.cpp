#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "causet/causet.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitAffirmative = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { causet_string_free(s); }
};

struct ModelGuard {
  causet_model* model = nullptr;
  ~ModelGuard() { causet_model_free(model); }
};

int fail(const StringGuard& error, const char* fallback) {
  std::cerr << "error: " << (error.s != nullptr ? error.s : fallback)
            << "\n";
  return kExitError;
}

/// Loads from a file path or, with --builtin, the fixture registry.
/// Returns kExitAffirmative or an exit code on failure.
int load_model(const std::string& path, const std::string& builtin,
               ModelGuard& out) {
  StringGuard error;
  causet_status status;
  if (!builtin.empty()) {
    status = causet_model_builtin(builtin.c_str(), &out.model, &error.s);
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read '" << path << "'\n";
      return kExitError;
    }
    std::ostringstream text;
    text << in.rdbuf();
    status = causet_model_parse(text.str().c_str(), &out.model, &error.s);
  }
  if (status != CAUSET_OK) return fail(error, "model load failed");
  return kExitAffirmative;
}

causet_cause_options make_options(bool extended, const std::string& semantics,
                                  int max_conjuncts,
                                  bool include_effect_variables) {
  causet_cause_options options = causet_cause_options_default();
  options.extended = extended ? 1 : 0;
  options.semantics = semantics == "solution" ? 1 : 0;
  options.max_conjuncts = max_conjuncts;
  options.include_effect_variables = include_effect_variables ? 1 : 0;
  if (const char* cap = std::getenv("CAUSET_MAX_VARS")) {
    options.max_vars = std::atoi(cap);
  }
  return options;
}

std::string render_assignment(const Json& values) {
  std::string out;
  for (auto it = values.begin(); it != values.end(); ++it) {
    if (!out.empty()) out += ", ";
    out += it.key() + "=" + it.value().dump();
  }
  return out.empty() ? "(empty)" : out;
}

std::string render_set(const Json& names) {
  std::string out;
  for (const auto& name : names) out += (out.empty() ? "" : ", ") +
                                        name.get<std::string>();
  return "{" + out + "}";
}

void render_verdict(const Json& verdict, bool verbose) {
  if (verdict["isCause"].get<bool>()) {
    std::cout << "cause\n";
    const Json& w = verdict["witness"];
    std::cout << "  W = " << render_set(w["wSet"]) << "\n";
    std::cout << "  w = " << render_assignment(w["wValues"]) << "\n";
    std::cout << "  x' = " << render_assignment(w["xPrime"]) << "\n";
    if (verbose) {
      std::cout << "  Z = " << render_set(w["zSet"]) << "\n";
      std::cout << "  z* = " << render_assignment(w["zStar"]) << "\n";
    }
  } else {
    std::cout << "not a cause (failed "
              << verdict["failedClause"].get<std::string>() << ")\n";
    if (verdict.contains("ac3Subcause")) {
      std::string sub;
      for (const auto& c : verdict["ac3Subcause"]) {
        if (!sub.empty()) sub += " & ";
        sub += c["var"].get<std::string>() + "=" + c["value"].dump();
      }
      std::cout << "  smaller cause: " << sub << "\n";
    }
    for (const auto& miss : verdict["nearMisses"]) {
      std::cout << "  near miss: W = " << render_set(miss["wSet"]) << ", w = "
                << render_assignment(miss["wValues"]) << ", x' = "
                << render_assignment(miss["xPrime"]);
      if (miss["reason"] == "ac2b") {
        std::cout << " passes AC2(a) but fails AC2(b) at W' = "
                  << render_set(miss["wPrime"]) << ", Z' = "
                  << render_set(miss["zPrime"]);
      } else {
        std::cout << " passes AC2(a) but is blocked by normality";
      }
      std::cout << "\n";
    }
  }
  if (verbose) {
    const Json& stats = verdict["statistics"];
    std::cout << "  examined: " << stats["partitions"] << " partitions, "
              << stats["settings"] << " settings, " << stats["subsetChecks"]
              << " subset checks\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reasoning over finite structural causal models"};
  app.require_subcommand(1);

  std::string path;
  std::string builtin;
  std::string context;
  std::string formula;
  std::string cause;
  std::string effect;
  std::string semantics = "literal";
  bool extended = false;
  bool json = false;
  bool verbose = false;
  int max_conjuncts = 1;
  bool include_effect_variables = false;

  auto add_model_args = [&](CLI::App* cmd) {
    cmd->add_option("model", path, "model file (.cm)");
    cmd->add_option("--builtin", builtin, "built-in fixture name");
  };

  CLI::App* cmd_validate = app.add_subcommand("validate", "check a model");
  add_model_args(cmd_validate);
  cmd_validate->add_flag("--json", json, "machine-readable report");

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a formula");
  add_model_args(cmd_eval);
  cmd_eval->add_option("--context", context, "exogenous values: U_A=1,U_B=0")
      ->required();
  cmd_eval->add_option("--formula", formula, "e.g. \"[ML<-0](F=1)\"")
      ->required();
  cmd_eval->add_flag("--json", json);

  CLI::App* cmd_cause = app.add_subcommand("cause", "check an actual cause");
  add_model_args(cmd_cause);
  cmd_cause->add_option("--context", context)->required();
  cmd_cause->add_option("--cause", cause, "e.g. \"L=1\" or \"L=1 & ML=1\"")
      ->required();
  cmd_cause->add_option("--effect", effect, "e.g. \"F=1\"")->required();
  cmd_cause->add_flag("--extended", extended, "apply the model's ranking");
  cmd_cause->add_option("--semantics", semantics, "literal|solution")
      ->check(CLI::IsMember({"literal", "solution"}));
  cmd_cause->add_flag("--json", json);
  cmd_cause->add_flag("--verbose", verbose, "show Z, z*, and search counts");

  CLI::App* cmd_causes = app.add_subcommand("causes", "enumerate causes");
  add_model_args(cmd_causes);
  cmd_causes->add_option("--context", context)->required();
  cmd_causes->add_option("--effect", effect)->required();
  cmd_causes->add_option("--max-conjuncts", max_conjuncts)
      ->check(CLI::PositiveNumber);
  cmd_causes->add_flag("--extended", extended);
  cmd_causes->add_option("--semantics", semantics, "literal|solution")
      ->check(CLI::IsMember({"literal", "solution"}));
  cmd_causes->add_flag("--include-effect-variables", include_effect_variables,
                       "keep candidates over the effect's own variables");
  cmd_causes->add_flag("--json", json);
  cmd_causes->add_flag("--verbose", verbose);

  std::vector<std::string> compare_models;
  std::vector<std::string> compare_builtins;
  std::vector<std::string> compare_contexts;
  CLI::App* cmd_compare =
      app.add_subcommand("compare", "same query across several models");
  cmd_compare->add_option("models", compare_models, "model files");
  cmd_compare->add_option("--builtin", compare_builtins,
                          "built-in fixture names");
  cmd_compare->add_option("--contexts", compare_contexts,
                          "one context per model, in order")
      ->required();
  cmd_compare->add_option("--cause", cause)->required();
  cmd_compare->add_option("--effect", effect)->required();
  cmd_compare->add_flag("--json", json);

  CLI::App* cmd_fixtures = app.add_subcommand("fixtures", "built-in models");
  CLI::App* cmd_fixtures_list = cmd_fixtures->add_subcommand("list");
  cmd_fixtures_list->add_flag("--json", json);
  std::string extract_name;
  std::string extract_out;
  CLI::App* cmd_fixtures_extract = cmd_fixtures->add_subcommand("extract");
  cmd_fixtures_extract->add_option("name", extract_name)->required();
  cmd_fixtures_extract->add_option("-o,--output", extract_out,
                                   "write to a file instead of stdout");
  cmd_fixtures->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  auto need_model = [&](CLI::App* cmd) {
    if (path.empty() == builtin.empty()) {
      std::cerr << "error: " << cmd->get_name()
                << " needs exactly one of a model file or --builtin\n";
      return false;
    }
    return true;
  };

  if (cmd_validate->parsed()) {
    if (!need_model(cmd_validate)) return kExitError;
    ModelGuard model;
    if (int rc = load_model(path, builtin, model); rc != 0) return rc;
    int is_valid = 0;
    StringGuard report;
    if (causet_model_validate(model.model, &is_valid, &report.s) !=
        CAUSET_OK) {
      std::cerr << "error: validation failed to run\n";
      return kExitError;
    }
    if (json) {
      std::cout << report.s << "\n";
    } else if (is_valid != 0) {
      std::cout << "valid\n";
    } else {
      for (const auto& item : Json::parse(report.s)) {
        std::cout << item["kind"].get<std::string>() << ": "
                  << item["message"].get<std::string>() << "\n";
      }
    }
    return is_valid != 0 ? kExitAffirmative : kExitNegative;
  }

  if (cmd_eval->parsed()) {
    if (!need_model(cmd_eval)) return kExitError;
    ModelGuard model;
    if (int rc = load_model(path, builtin, model); rc != 0) return rc;
    int result = 0;
    StringGuard error;
    if (causet_eval(model.model, context.c_str(), formula.c_str(), &result,
                    &error.s) != CAUSET_OK) {
      return fail(error, "evaluation failed");
    }
    if (json) {
      Json out;
      out["result"] = result != 0;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << (result != 0 ? "true" : "false") << "\n";
    }
    return kExitAffirmative;
  }

  if (cmd_cause->parsed()) {
    if (!need_model(cmd_cause)) return kExitError;
    ModelGuard model;
    if (int rc = load_model(path, builtin, model); rc != 0) return rc;
    causet_cause_options options =
        make_options(extended, semantics, 0, false);
    StringGuard verdict;
    StringGuard error;
    if (causet_check_cause(model.model, context.c_str(), cause.c_str(),
                           effect.c_str(), &options, &verdict.s,
                           &error.s) != CAUSET_OK) {
      return fail(error, "cause check failed");
    }
    Json v = Json::parse(verdict.s);
    if (json) {
      std::cout << verdict.s << "\n";
    } else {
      render_verdict(v, verbose);
    }
    return v["isCause"].get<bool>() ? kExitAffirmative : kExitNegative;
  }

  if (cmd_causes->parsed()) {
    if (!need_model(cmd_causes)) return kExitError;
    ModelGuard model;
    if (int rc = load_model(path, builtin, model); rc != 0) return rc;
    causet_cause_options options = make_options(
        extended, semantics, max_conjuncts, include_effect_variables);
    StringGuard causes;
    StringGuard error;
    if (causet_enumerate_causes(model.model, context.c_str(), effect.c_str(),
                                &options, &causes.s,
                                &error.s) != CAUSET_OK) {
      return fail(error, "enumeration failed");
    }
    Json rows = Json::parse(causes.s);
    if (json) {
      std::cout << causes.s << "\n";
    } else if (rows.empty()) {
      std::cout << "no causes found\n";
    } else {
      for (const auto& row : rows) {
        std::string cand;
        for (const auto& c : row["candidate"]) {
          if (!cand.empty()) cand += " & ";
          cand += c["var"].get<std::string>() + "=" + c["value"].dump();
        }
        const Json& w = row["witness"];
        std::cout << cand << "  (W = " << render_set(w["wSet"]) << ", w = "
                  << render_assignment(w["wValues"]) << ", x' = "
                  << render_assignment(w["xPrime"]) << ")\n";
      }
    }
    return rows.empty() ? kExitNegative : kExitAffirmative;
  }

  if (cmd_compare->parsed()) {
    std::vector<ModelGuard> guards;
    guards.reserve(compare_models.size() + compare_builtins.size());
    std::vector<const causet_model*> handles;
    for (const std::string& p : compare_models) {
      guards.emplace_back();
      if (int rc = load_model(p, "", guards.back()); rc != 0) return rc;
      handles.push_back(guards.back().model);
    }
    for (const std::string& b : compare_builtins) {
      guards.emplace_back();
      if (int rc = load_model("", b, guards.back()); rc != 0) return rc;
      handles.push_back(guards.back().model);
    }
    if (handles.size() < 2) {
      std::cerr << "error: compare needs at least two models\n";
      return kExitError;
    }
    if (compare_contexts.size() != handles.size()) {
      std::cerr << "error: compare needs one --contexts per model\n";
      return kExitError;
    }
    std::vector<const char*> context_ptrs;
    for (const std::string& c : compare_contexts) {
      context_ptrs.push_back(c.c_str());
    }
    causet_cause_options options = make_options(false, "literal", 0, false);
    StringGuard result;
    StringGuard error;
    if (causet_compare(handles.data(), handles.size(), context_ptrs.data(),
                       cause.c_str(), effect.c_str(), &options, &result.s,
                       &error.s) != CAUSET_OK) {
      return fail(error, "comparison failed");
    }
    Json cmp = Json::parse(result.s);
    if (json) {
      std::cout << result.s << "\n";
    } else {
      for (std::size_t i = 0; i < cmp["verdicts"].size(); ++i) {
        const Json& row = cmp["verdicts"][i];
        std::cout << "model " << (i + 1) << ": ";
        if (row.contains("error")) {
          std::cout << "error: " << row["error"].get<std::string>() << "\n";
        } else {
          std::cout << (row["verdict"]["isCause"].get<bool>()
                            ? "cause"
                            : "not a cause")
                    << "\n";
        }
      }
      std::cout << "stable: " << (cmp["stable"].get<bool>() ? "yes" : "no")
                << "\n";
      const Json& topo = cmp["topologyChanged"];
      for (std::size_t i = 0; i < topo.size(); ++i) {
        std::cout << "topology " << (i + 1) << "->" << (i + 2) << ": "
                  << (topo[i].get<bool>() ? "changed" : "unchanged") << "\n";
      }
    }
    return cmp["stable"].get<bool>() ? kExitAffirmative : kExitNegative;
  }

  if (cmd_fixtures->parsed()) {
    if (cmd_fixtures_list->parsed()) {
      StringGuard names;
      if (causet_fixture_list(&names.s) != CAUSET_OK) return kExitError;
      if (json) {
        std::cout << names.s << "\n";
      } else {
        for (const auto& name : Json::parse(names.s)) {
          std::cout << name.get<std::string>() << "\n";
        }
      }
      return kExitAffirmative;
    }
    StringGuard text;
    StringGuard error;
    if (causet_fixture_source(extract_name.c_str(), &text.s, &error.s) !=
        CAUSET_OK) {
      return fail(error, "unknown fixture");
    }
    if (extract_out.empty()) {
      std::cout << text.s;
    } else {
      std::ofstream out(extract_out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << extract_out << "'\n";
        return kExitError;
      }
      out << text.s;
    }
    return kExitAffirmative;
  }

  return kExitError;
}
