#pragma once

#include <optional>
#include <string>

#include "errors.hpp"
#include "causality.hpp"
#include "model.hpp"
#include "normality.hpp"
#include "semantics.hpp"

namespace causet {

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::Parse,
              std::to_string(line) + ":" + std::to_string(column) + ": " +
                  message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// One model file: a causal model and its optional ranking block.
struct ModelDocument {
  CausalModel model;
  std::optional<RankingFunction> ranking;

  bool operator==(const ModelDocument&) const = default;
};

/// Syntax plus name resolution only: every referenced variable must be
/// declared, declared names must be unique, and ranking patterns must fit the
/// signature. Does not check acyclicity or mechanism totality, so structurally
/// broken models can still be loaded and reported on by validate_model.
ModelDocument parse_document(const std::string& text);

/// parse_document followed by full validation; the first violation becomes a
/// located ParseError.
ModelDocument parse_model(const std::string& text);

/// `[Y1<-v1, Y2<-v2](body)` or a bare boolean body; events are IDENT = INT,
/// connectives ! > & > | with parentheses. Names resolve against the model;
/// intervention targets must be endogenous and distinct.
CausalFormula parse_formula(const std::string& text, const CausalModel& model);

/// Conjunction of primitive events: `ST=1` or `L=1 & ML=1` (`,` also
/// accepted as the separator).
CauseCandidate parse_candidate(const std::string& text,
                               const CausalModel& model);

/// `KEY=VAL, KEY=VAL, ...` over exogenous variables; separators optional.
Context parse_context(const std::string& text, const CausalModel& model);

/// Deterministic canonical rendering; parse_document(print_model(doc))
/// equals doc structurally.
std::string print_model(const ModelDocument& doc);

}  // namespace causet
