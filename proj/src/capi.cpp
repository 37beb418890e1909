#include "causet/causet.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "corpus.hpp"
#include "dsl.hpp"
#include "errors.hpp"
#include "causality.hpp"
#include "jsonio.hpp"
#include "model.hpp"
#include "normality.hpp"
#include "semantics.hpp"

struct causet_model {
  causet::ModelDocument document;
  bool validated = false;
  bool valid = false;
  std::vector<causet::Violation> violations;

  void ensure_validated() {
    if (!validated) {
      violations = causet::validate_model(document.model);
      valid = violations.empty();
      validated = true;
    }
  }
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& message) {
  if (error != nullptr) *error = dup_string(message);
}

causet_status status_for(const causet::Error& e) {
  switch (e.kind()) {
    case causet::ErrorKind::Parse:
      return CAUSET_ERR_PARSE;
    case causet::ErrorKind::InvalidModel:
      return CAUSET_ERR_INVALID_MODEL;
    case causet::ErrorKind::SearchSpaceExceeded:
      return CAUSET_ERR_TOO_LARGE;
    case causet::ErrorKind::UnknownVariable:
    case causet::ErrorKind::UnknownFixture:
      return CAUSET_ERR_UNKNOWN_NAME;
    default:
      return CAUSET_ERR_BAD_QUERY;
  }
}

template <typename Fn>
causet_status guarded(char** error, Fn&& fn) {
  try {
    return fn();
  } catch (const causet::Error& e) {
    set_error(error, e.what());
    return status_for(e);
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return CAUSET_ERR_INTERNAL;
  }
}

causet_status require_valid(causet_model* model, char** error) {
  model->ensure_validated();
  if (!model->valid) {
    set_error(error, "model '" + model->document.model.name +
                         "' fails validation: " +
                         model->violations.front().message);
    return CAUSET_ERR_INVALID_MODEL;
  }
  return CAUSET_OK;
}

causet::HpOptions hp_options(const causet_cause_options* options) {
  causet::HpOptions hp;
  if (options != nullptr && options->max_vars > 0) {
    hp.max_vars = (std::size_t)options->max_vars;
  }
  return hp;
}

causet::NormalitySemantics semantics_of(const causet_cause_options* options) {
  return options != nullptr && options->semantics == 1
             ? causet::NormalitySemantics::Solution
             : causet::NormalitySemantics::Literal;
}

const causet::RankingFunction& require_ranking(const causet_model* model) {
  if (!model->document.ranking) {
    throw causet::Error(causet::ErrorKind::Precondition,
                        "model '" + model->document.model.name +
                            "' has no ranking block; an extended query "
                            "needs one");
  }
  return *model->document.ranking;
}

causet::BoolFormula parse_effect(const std::string& text,
                                 const causet::CausalModel& model) {
  causet::CausalFormula f = causet::parse_formula(text, model);
  if (!f.interventions.empty()) {
    throw causet::Error(causet::ErrorKind::Precondition,
                        "effect formula cannot contain interventions");
  }
  return f.body;
}

}  // namespace

extern "C" {

causet_cause_options causet_cause_options_default(void) {
  causet_cause_options options;
  options.extended = 0;
  options.semantics = 0;
  options.max_vars = 0;
  options.max_conjuncts = 0;
  options.include_effect_variables = 0;
  return options;
}

causet_status causet_model_parse(const char* text, causet_model** out,
                                 char** error) {
  if (text == nullptr || out == nullptr) {
    set_error(error, "null argument");
    return CAUSET_ERR_BAD_QUERY;
  }
  *out = nullptr;
  return guarded(error, [&] {
    auto model = std::make_unique<causet_model>();
    model->document = causet::parse_document(text);
    *out = model.release();
    return CAUSET_OK;
  });
}

causet_status causet_model_builtin(const char* name, causet_model** out,
                                   char** error) {
  if (name == nullptr || out == nullptr) {
    set_error(error, "null argument");
    return CAUSET_ERR_BAD_QUERY;
  }
  *out = nullptr;
  return guarded(error, [&] {
    causet::Fixture fixture = causet::load_fixture(name);
    auto model = std::make_unique<causet_model>();
    model->document = std::move(fixture.document);
    *out = model.release();
    return CAUSET_OK;
  });
}

void causet_model_free(causet_model* model) { delete model; }

causet_status causet_model_validate(const causet_model* model, int* is_valid,
                                    char** report) {
  if (model == nullptr) return CAUSET_ERR_BAD_QUERY;
  return guarded(nullptr, [&] {
    auto* m = const_cast<causet_model*>(model);
    m->ensure_validated();
    if (is_valid != nullptr) *is_valid = m->valid ? 1 : 0;
    if (report != nullptr) {
      *report = dup_string(causet::violations_json(m->violations).dump(2));
    }
    return CAUSET_OK;
  });
}

causet_status causet_model_print(const causet_model* model, char** text) {
  if (model == nullptr || text == nullptr) return CAUSET_ERR_BAD_QUERY;
  return guarded(nullptr, [&] {
    *text = dup_string(causet::print_model(model->document));
    return CAUSET_OK;
  });
}

causet_status causet_eval(const causet_model* model, const char* context,
                          const char* formula, int* result, char** error) {
  if (model == nullptr || context == nullptr || formula == nullptr ||
      result == nullptr) {
    set_error(error, "null argument");
    return CAUSET_ERR_BAD_QUERY;
  }
  return guarded(error, [&] {
    auto* m = const_cast<causet_model*>(model);
    causet_status valid = require_valid(m, error);
    if (valid != CAUSET_OK) return valid;
    causet::Context u = causet::parse_context(context, m->document.model);
    causet::CausalFormula f =
        causet::parse_formula(formula, m->document.model);
    *result = causet::satisfies(m->document.model, u, f) ? 1 : 0;
    return CAUSET_OK;
  });
}

causet_status causet_check_cause(const causet_model* model,
                                 const char* context, const char* cause,
                                 const char* effect,
                                 const causet_cause_options* options,
                                 char** verdict, char** error) {
  if (model == nullptr || context == nullptr || cause == nullptr ||
      effect == nullptr || verdict == nullptr) {
    set_error(error, "null argument");
    return CAUSET_ERR_BAD_QUERY;
  }
  return guarded(error, [&] {
    auto* m = const_cast<causet_model*>(model);
    causet_status valid = require_valid(m, error);
    if (valid != CAUSET_OK) return valid;
    const causet::CausalModel& base = m->document.model;
    causet::Context u = causet::parse_context(context, base);
    causet::CauseCandidate candidate = causet::parse_candidate(cause, base);
    causet::BoolFormula phi = parse_effect(effect, base);
    causet::Verdict v;
    if (options != nullptr && options->extended != 0) {
      causet::ExtendedCausalModel extended{base, require_ranking(m)};
      v = causet::is_actual_cause_extended(extended, u, candidate, phi,
                                           semantics_of(options),
                                           hp_options(options));
    } else {
      v = causet::is_actual_cause(base, u, candidate, phi,
                                  hp_options(options));
    }
    *verdict = dup_string(causet::verdict_json(v).dump(2));
    return CAUSET_OK;
  });
}

causet_status causet_enumerate_causes(const causet_model* model,
                                      const char* context, const char* effect,
                                      const causet_cause_options* options,
                                      char** causes, char** error) {
  if (model == nullptr || context == nullptr || effect == nullptr ||
      causes == nullptr) {
    set_error(error, "null argument");
    return CAUSET_ERR_BAD_QUERY;
  }
  return guarded(error, [&] {
    auto* m = const_cast<causet_model*>(model);
    causet_status valid = require_valid(m, error);
    if (valid != CAUSET_OK) return valid;
    const causet::CausalModel& base = m->document.model;
    causet::Context u = causet::parse_context(context, base);
    causet::BoolFormula phi = parse_effect(effect, base);
    std::size_t max_conjuncts = 1;
    bool include_effect_vars = false;
    if (options != nullptr) {
      if (options->max_conjuncts > 0) {
        max_conjuncts = (std::size_t)options->max_conjuncts;
      }
      include_effect_vars = options->include_effect_variables != 0;
    }
    std::vector<std::pair<causet::CauseCandidate, causet::Witness>> found;
    if (options != nullptr && options->extended != 0) {
      causet::ExtendedCausalModel extended{base, require_ranking(m)};
      found = causet::enumerate_causes(base, u, phi, max_conjuncts,
                                       !include_effect_vars,
                                       hp_options(options), &extended,
                                       semantics_of(options));
    } else {
      found = causet::enumerate_causes(base, u, phi, max_conjuncts,
                                       !include_effect_vars,
                                       hp_options(options));
    }
    *causes = dup_string(causet::causes_json(found).dump(2));
    return CAUSET_OK;
  });
}

causet_status causet_compare(const causet_model* const* models, size_t count,
                             const char* const* contexts, const char* cause,
                             const char* effect,
                             const causet_cause_options* options,
                             char** result, char** error) {
  if (models == nullptr || contexts == nullptr || cause == nullptr ||
      effect == nullptr || result == nullptr || count < 2) {
    set_error(error, "comparison needs at least two models with contexts");
    return CAUSET_ERR_BAD_QUERY;
  }
  return guarded(error, [&] {
    std::vector<causet::CausalModel> base;
    std::vector<causet::Context> us;
    for (size_t i = 0; i < count; ++i) {
      auto* m = const_cast<causet_model*>(models[i]);
      causet_status valid = require_valid(m, error);
      if (valid != CAUSET_OK) return valid;
      base.push_back(m->document.model);
      us.push_back(causet::parse_context(contexts[i], m->document.model));
    }
    // The candidate and effect must name variables present in every model;
    // parse against the first and let per-model checks catch the rest.
    causet::CauseCandidate candidate =
        causet::parse_candidate(cause, base.front());
    causet::BoolFormula phi = parse_effect(effect, base.front());
    causet::Comparison cmp = causet::compare_verdicts(
        base, us, candidate, phi, hp_options(options));
    *result = dup_string(causet::comparison_json(cmp).dump(2));
    return CAUSET_OK;
  });
}

causet_status causet_fixture_list(char** names) {
  if (names == nullptr) return CAUSET_ERR_BAD_QUERY;
  causet::Json out = causet::Json::array();
  for (const std::string& name : causet::fixture_names()) out.push_back(name);
  *names = dup_string(out.dump(2));
  return CAUSET_OK;
}

causet_status causet_fixture_source(const char* name, char** text,
                                    char** error) {
  if (name == nullptr || text == nullptr) {
    set_error(error, "null argument");
    return CAUSET_ERR_BAD_QUERY;
  }
  return guarded(error, [&] {
    *text = dup_string(causet::load_fixture(name).source);
    return CAUSET_OK;
  });
}

void causet_string_free(char* s) { delete[] s; }

const char* causet_version(void) { return "0.1.0"; }

}  // extern "C"
