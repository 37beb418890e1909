#ifndef CAUSET_H
#define CAUSET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Reasoning over finite structural causal models: interventionist
 * counterfactuals, actual-cause checking with witness search, and
 * ranking-based normality.
 *
 * All functions return a causet_status. Structured results are returned as
 * heap-allocated UTF-8 strings (JSON unless noted) through out-parameters;
 * release them with causet_string_free. On failure, *error (when the caller
 * passes a non-NULL slot) receives an allocated human-readable message.
 */

typedef enum causet_status {
  CAUSET_OK = 0,
  CAUSET_ERR_PARSE = 1,         /* bad syntax; message carries line:column */
  CAUSET_ERR_INVALID_MODEL = 2, /* cycle, missing equation, partial mechanism */
  CAUSET_ERR_BAD_QUERY = 3,     /* ill-formed context, candidate, or formula */
  CAUSET_ERR_TOO_LARGE = 4,     /* search or enumeration cap exceeded */
  CAUSET_ERR_UNKNOWN_NAME = 5,  /* unknown variable or fixture name */
  CAUSET_ERR_INTERNAL = 6
} causet_status;

typedef struct causet_model causet_model;

typedef struct causet_cause_options {
  int extended;       /* nonzero: apply the model's ranking to AC2(a) */
  int semantics;      /* 0 = literal world existence, 1 = solution world */
  int max_vars;       /* witness-search cap on endogenous count; 0 = 16 */
  int max_conjuncts;  /* enumeration only; 0 = 1 */
  int include_effect_variables; /* enumeration only; nonzero keeps them */
} causet_cause_options;

/* All-defaults options value. */
causet_cause_options causet_cause_options_default(void);

/* Parses model text: syntax and name resolution only, so structurally
 * broken models (cycles, missing equations) still load and can be reported
 * on by causet_model_validate. Query functions reject invalid models with
 * CAUSET_ERR_INVALID_MODEL. */
causet_status causet_model_parse(const char* text, causet_model** out,
                                 char** error);

/* Loads a built-in fixture model by registry name. */
causet_status causet_model_builtin(const char* name, causet_model** out,
                                   char** error);

void causet_model_free(causet_model* model);

/* *is_valid gets 0/1; *report receives a JSON array of violations (empty
 * when valid). Either out-parameter may be NULL. */
causet_status causet_model_validate(const causet_model* model, int* is_valid,
                                    char** report);

/* Canonical model text; re-parses to a structurally equal model. */
causet_status causet_model_print(const causet_model* model, char** text);

/* Evaluates `[Y<-y,...](body)` (or a bare body) at the given context
 * ("U_A=1, U_B=0"). *result gets 0 or 1. */
causet_status causet_eval(const causet_model* model, const char* context,
                          const char* formula, int* result, char** error);

/* Actual-cause check for `cause` ("L=1" or "L=1 & ML=1") against `effect`
 * at `context`. *verdict receives the verdict JSON: isCause, failedClause,
 * witness, statistics, nearMisses. options may be NULL for defaults. */
causet_status causet_check_cause(const causet_model* model,
                                 const char* context, const char* cause,
                                 const char* effect,
                                 const causet_cause_options* options,
                                 char** verdict, char** error);

/* All actual-valued candidates up to options->max_conjuncts conjuncts that
 * cause `effect` at `context`; JSON array ordered by conjunct count then
 * declaration order. */
causet_status causet_enumerate_causes(const causet_model* model,
                                      const char* context, const char* effect,
                                      const causet_cause_options* options,
                                      char** causes, char** error);

/* Same cause/effect query across several models, each with its own context.
 * *result receives per-model verdicts, a stability flag, and per-adjacent-
 * pair topology-change notes. */
causet_status causet_compare(const causet_model* const* models, size_t count,
                             const char* const* contexts, const char* cause,
                             const char* effect,
                             const causet_cause_options* options,
                             char** result, char** error);

/* JSON array of built-in fixture names. */
causet_status causet_fixture_list(char** names);

/* Source text of a built-in fixture. */
causet_status causet_fixture_source(const char* name, char** text,
                                    char** error);

void causet_string_free(char* s);

const char* causet_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CAUSET_H */
