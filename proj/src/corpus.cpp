#include "corpus.hpp"

#include <functional>

#include "errors.hpp"

namespace causet {

namespace {

constexpr const char* kForestFireDisjunctive = R"(model forest_fire_disjunctive {
  exogenous  { U_L: {0,1}  U_ML: {0,1} }
  endogenous { L: {0,1}  ML: {0,1}  F: {0,1} }
  equations  { L = U_L   ML = U_ML   F = max(L, ML) }
}
)";

constexpr const char* kForestFireConjunctive = R"(model forest_fire_conjunctive {
  exogenous  { U_L: {0,1}  U_ML: {0,1} }
  endogenous { L: {0,1}  ML: {0,1}  F: {0,1} }
  equations  { L = U_L   ML = U_ML   F = min(L, ML) }
}
)";

constexpr const char* kRockThrow3 = R"(model rock_throw_3var {
  exogenous  { U_ST: {0,1}  U_BT: {0,1} }
  endogenous { ST: {0,1}  BT: {0,1}  BS: {0,1} }
  equations  { ST = U_ST   BT = U_BT   BS = max(ST, BT) }
}
)";

constexpr const char* kRockThrow5 = R"(model rock_throw_5var {
  exogenous  { U_ST: {0,1}  U_BT: {0,1} }
  endogenous { ST: {0,1}  BT: {0,1}  SH: {0,1}  BH: {0,1}  BS: {0,1} }
  equations  {
    ST = U_ST
    BT = U_BT
    SH = ST
    BH = min(BT, 1 - SH)
    BS = max(SH, BH)
  }
}
)";

// A = 1 means the assassin refrains from poisoning; B = 1 means the
// bodyguard adds the antidote. The equations match forest_fire_disjunctive
// variable for variable; the ranking grades poisoning as abnormal and
// poisoning-plus-antidote as doubly so.
constexpr const char* kBodyguard = R"(model bodyguard {
  exogenous  { U_A: {0,1}  U_B: {0,1} }
  endogenous { A: {0,1}  B: {0,1}  VS: {0,1} }
  equations  { A = U_A   B = U_B   VS = max(A, B) }
  ranking {
    rule A = 0, B = 1 => 2
    rule A = 0, B = 0 => 1
    default => 0
  }
}
)";

constexpr const char* kTrainSimple = R"(model train_simple {
  exogenous  { U_S: {0,1} }
  endogenous { S: {0,1}  A: {0,1} }
  equations  { S = U_S   A = 1 }
}
)";

constexpr const char* kTrainBlocked = R"(model train_blocked {
  exogenous  { U_S: {0,1}  U_LB: {0,1}  U_RB: {0,1} }
  endogenous { S: {0,1}  LB: {0,1}  RB: {0,1}  A: {0,1} }
  equations  {
    S = U_S
    LB = U_LB
    RB = U_RB
    A = if(S = 1, 1 - LB, 1 - RB)
  }
  ranking {
    rule LB = 0, RB = 0 => 0
    default => 1
  }
}
)";

// Order values: 0 = no order, 1 = march, 2 = some other order. The major's
// order, when present, overrides the sergeant's.
constexpr const char* kSoldiersTrumping = R"(model soldiers_trumping {
  exogenous  { U_M: {0,1,2}  U_S: {0,1,2} }
  endogenous { M: {0,1,2}  S: {0,1,2}  A: {0,1,2} }
  equations  { M = U_M   S = U_S   A = if(M != 0, M, S) }
}
)";

// F1: fire in May; C: the camper goes camping; F2: fire in June.
constexpr const char* kCamping = R"(model camping {
  exogenous  { U_F1: {0,1} }
  endogenous { F1: {0,1}  C: {0,1}  F2: {0,1} }
  equations  { F1 = U_F1   C = 1 - F1   F2 = C * (1 - F1) }
}
)";

// The rejected one-fire-variable representation: camping depends on there
// being no fire, and the fire depends on camping. Parses, but fails
// validation with a cycle.
constexpr const char* kCampingCyclic = R"(model camping_cyclic {
  exogenous  { U: {0,1} }
  endogenous { C: {0,1}  F: {0,1} }
  equations  { C = 1 - F   F = C }
}
)";

// P: 0 = no push, 1 = normal push, 2 = solid push. Only a solid push opens
// the stuck door; any push trips the alarm.
constexpr const char* kDoorAlarm = R"(model door_alarm {
  exogenous  { U_P: {0,1,2} }
  endogenous { P: {0,1,2}  O: {0,1}  AL: {0,1} }
  equations  { P = U_P   O = (P = 2)   AL = (P >= 1) }
}
)";

// doctors(n): A_i says doctor i is assigned to the patient, T_i that doctor
// i treats the patient; both choices are free inputs. The ranking grades
// worlds by how far the assignment norm is violated: nobody involved (0),
// the assigned doctor treats (1), the assigned doctor omits treatment (2),
// an unassigned doctor treats (3), anything messier (default).
std::string doctors_source(int n) {
  auto var = [](const char* stem, int i) {
    return std::string(stem) + std::to_string(i);
  };
  std::string exo;
  std::string endo;
  std::string eqs;
  for (int i = 1; i <= n; ++i) {
    exo += "    " + var("A", i) + ": {0,1}\n";
    exo += "    " + var("U_T", i) + ": {0,1}\n";
    endo += "    " + var("T", i) + ": {0,1}\n";
    eqs += "    " + var("T", i) + " = " + var("U_T", i) + "\n";
  }
  endo += "    S: {0,1}\n";
  std::string any_treat = var("T", n);
  for (int i = n - 1; i >= 1; --i) {
    any_treat = "max(" + var("T", i) + ", " + any_treat + ")";
  }
  eqs += "    S = 1 - " + any_treat + "\n";

  auto all_pattern = [&](const std::function<int(int)>& a,
                         const std::function<int(int)>& t) {
    std::string out;
    for (int i = 1; i <= n; ++i) {
      out += var("A", i) + " = " + std::to_string(a(i)) + ", ";
    }
    for (int i = 1; i <= n; ++i) {
      if (i > 1) out += ", ";
      out += var("T", i) + " = " + std::to_string(t(i));
    }
    return out;
  };

  std::string rules;
  rules += "    rule " +
           all_pattern([](int) { return 0; }, [](int) { return 0; }) +
           " => 0\n";
  for (int i = 1; i <= n; ++i) {
    rules += "    rule " +
             all_pattern([i](int j) { return j == i ? 1 : 0; },
                         [i](int j) { return j == i ? 1 : 0; }) +
             " => 1\n";
  }
  for (int i = 1; i <= n; ++i) {
    rules += "    rule " +
             all_pattern([i](int j) { return j == i ? 1 : 0; },
                         [](int) { return 0; }) +
             " => 2\n";
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      std::string pattern;
      for (int k = 1; k <= n; ++k) {
        pattern += var("A", k) + " = " + (k == i ? "1" : "0") + ", ";
      }
      pattern += var("T", j) + " = 1";
      rules += "    rule " + pattern + " => 3\n";
    }
  }

  std::string out = "model doctors" + std::to_string(n) + " {\n";
  out += "  exogenous {\n" + exo + "  }\n";
  out += "  endogenous {\n" + endo + "  }\n";
  out += "  equations {\n" + eqs + "  }\n";
  out += "  ranking {\n" + rules + "    default => 4\n  }\n";
  out += "}\n";
  return out;
}

Context make_context(const CausalModel& model,
                     const std::string& text) {
  return parse_context(text, model);
}

ExpectedVerdict expect(std::string context_name, std::string candidate,
                       std::string effect, bool is_cause, std::string note) {
  ExpectedVerdict v;
  v.context_name = std::move(context_name);
  v.candidate = std::move(candidate);
  v.effect = std::move(effect);
  v.is_cause = is_cause;
  v.note = std::move(note);
  return v;
}

ExpectedVerdict expect_ext(std::string context_name, std::string candidate,
                           std::string effect, NormalitySemantics semantics,
                           bool is_cause, std::string note) {
  ExpectedVerdict v =
      expect(std::move(context_name), std::move(candidate), std::move(effect),
             is_cause, std::move(note));
  v.extended = true;
  v.semantics = semantics;
  return v;
}

Fixture build(const std::string& name, std::string source, bool valid) {
  Fixture fixture;
  fixture.name = name;
  fixture.source = std::move(source);
  fixture.valid = valid;
  fixture.document =
      valid ? parse_model(fixture.source) : parse_document(fixture.source);
  return fixture;
}

int parse_doctor_count(const std::string& name) {
  if (name == "doctors") return 3;
  if (name.rfind("doctors(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(8, name.size() - 9);
    if (inner.empty() || inner.size() > 1 || inner[0] < '2' || inner[0] > '6') {
      throw Error(ErrorKind::UnknownFixture,
                  "doctors(n) supports n between 2 and 6, got 'doctors(" +
                      inner + ")'");
    }
    return inner[0] - '0';
  }
  return 0;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {
      "forest-fire-disjunctive",
      "forest-fire-conjunctive",
      "rock-throw-3var",
      "rock-throw-5var",
      "bodyguard",
      "doctors",
      "train-simple",
      "train-blocked",
      "soldiers-trumping",
      "camping",
      "camping-cyclic",
      "door-alarm",
  };
}

Fixture load_fixture(const std::string& name) {
  const std::string oracle_note =
      "derived by exhaustive search; not an externally documented verdict";

  if (name == "forest-fire-disjunctive") {
    Fixture f = build(name, kForestFireDisjunctive, true);
    f.contexts.emplace_back("both",
                            make_context(f.document.model, "U_L=1, U_ML=1"));
    f.expected.push_back(expect("both", "L=1", "F=1", true, ""));
    f.expected.push_back(expect("both", "ML=1", "F=1", true, ""));
    return f;
  }
  if (name == "forest-fire-conjunctive") {
    Fixture f = build(name, kForestFireConjunctive, true);
    f.contexts.emplace_back("both",
                            make_context(f.document.model, "U_L=1, U_ML=1"));
    f.expected.push_back(expect("both", "L=1", "F=1", true, ""));
    f.expected.push_back(expect("both", "ML=1", "F=1", true, ""));
    return f;
  }
  if (name == "rock-throw-3var") {
    Fixture f = build(name, kRockThrow3, true);
    f.contexts.emplace_back(
        "both-throw", make_context(f.document.model, "U_ST=1, U_BT=1"));
    f.expected.push_back(expect("both-throw", "ST=1", "BS=1", true, ""));
    f.expected.push_back(expect("both-throw", "BT=1", "BS=1", true, ""));
    return f;
  }
  if (name == "rock-throw-5var") {
    Fixture f = build(name, kRockThrow5, true);
    f.contexts.emplace_back(
        "both-throw", make_context(f.document.model, "U_ST=1, U_BT=1"));
    f.expected.push_back(expect("both-throw", "ST=1", "BS=1", true, ""));
    f.expected.push_back(expect("both-throw", "BT=1", "BS=1", false, ""));
    return f;
  }
  if (name == "bodyguard") {
    Fixture f = build(name, kBodyguard, true);
    f.contexts.emplace_back("actual",
                            make_context(f.document.model, "U_A=1, U_B=1"));
    f.expected.push_back(expect("actual", "B=1", "VS=1", true, ""));
    f.expected.push_back(expect("actual", "A=1", "VS=1", true, ""));
    f.expected.push_back(expect_ext("actual", "B=1", "VS=1",
                                    NormalitySemantics::Literal, false, ""));
    f.expected.push_back(expect_ext("actual", "B=1", "VS=1",
                                    NormalitySemantics::Solution, false, ""));
    return f;
  }
  if (int n = parse_doctor_count(name); n != 0) {
    Fixture f = build(name, doctors_source(n), true);
    std::string none_treat = "A1=1";
    std::string d1_treats = "A1=1, U_T1=1";
    for (int i = 2; i <= n; ++i) {
      none_treat += ", A" + std::to_string(i) + "=0";
      d1_treats += ", A" + std::to_string(i) + "=0";
    }
    for (int i = 1; i <= n; ++i) {
      if (i > 1) d1_treats += ", U_T" + std::to_string(i) + "=0";
      none_treat += ", U_T" + std::to_string(i) + "=0";
    }
    f.contexts.emplace_back("assigned-none-treat",
                            make_context(f.document.model, none_treat));
    f.contexts.emplace_back("assigned-and-treats",
                            make_context(f.document.model, d1_treats));
    f.expected.push_back(
        expect("assigned-none-treat", "T1=0", "S=1", true, ""));
    f.expected.push_back(expect_ext("assigned-none-treat", "T1=0", "S=1",
                                    NormalitySemantics::Solution, true, ""));
    f.expected.push_back(expect_ext("assigned-none-treat", "T1=0", "S=1",
                                    NormalitySemantics::Literal, true, ""));
    for (int i = 2; i <= n; ++i) {
      f.expected.push_back(
          expect_ext("assigned-none-treat", "T" + std::to_string(i) + "=0",
                     "S=1", NormalitySemantics::Solution, false,
                     "holds under the solution-world semantics only; the "
                     "literal semantics admits the off-context world where "
                     "doctor " + std::to_string(i) + " is assigned"));
    }
    f.expected.push_back(expect_ext("assigned-and-treats", "T1=1", "S=0",
                                    NormalitySemantics::Literal, true,
                                    "holds under the literal semantics only; "
                                    "solution worlds keep doctor 1 assigned, "
                                    "so omitting treatment rates abnormal"));
    return f;
  }
  if (name == "train-simple") {
    Fixture f = build(name, kTrainSimple, true);
    f.contexts.emplace_back("switch-thrown",
                            make_context(f.document.model, "U_S=1"));
    f.expected.push_back(expect("switch-thrown", "S=1", "A=1", false, ""));
    return f;
  }
  if (name == "train-blocked") {
    Fixture f = build(name, kTrainBlocked, true);
    f.contexts.emplace_back(
        "unblocked",
        make_context(f.document.model, "U_S=1, U_LB=0, U_RB=0"));
    f.expected.push_back(expect("unblocked", "S=1", "A=1", true, ""));
    f.expected.push_back(expect_ext("unblocked", "S=1", "A=1",
                                    NormalitySemantics::Literal, false, ""));
    f.expected.push_back(expect_ext("unblocked", "S=1", "A=1",
                                    NormalitySemantics::Solution, false, ""));
    return f;
  }
  if (name == "soldiers-trumping") {
    Fixture f = build(name, kSoldiersTrumping, true);
    f.contexts.emplace_back(
        "both-order-march", make_context(f.document.model, "U_M=1, U_S=1"));
    f.expected.push_back(
        expect("both-order-march", "M=1", "A=1", true, oracle_note));
    f.expected.push_back(
        expect("both-order-march", "S=1", "A=1", true, oracle_note));
    return f;
  }
  if (name == "camping") {
    Fixture f = build(name, kCamping, true);
    f.contexts.emplace_back("no-may-fire",
                            make_context(f.document.model, "U_F1=0"));
    f.expected.push_back(
        expect("no-may-fire", "C=1", "F2=1", true, oracle_note));
    f.expected.push_back(
        expect("no-may-fire", "F1=0", "F2=1", true, oracle_note));
    return f;
  }
  if (name == "camping-cyclic") {
    return build(name, kCampingCyclic, false);
  }
  if (name == "door-alarm") {
    Fixture f = build(name, kDoorAlarm, true);
    f.contexts.emplace_back("solid-push",
                            make_context(f.document.model, "U_P=2"));
    f.expected.push_back(
        expect("solid-push", "P=2", "O=1", true, oracle_note));
    f.expected.push_back(
        expect("solid-push", "P=2", "AL=1", true, oracle_note));
    return f;
  }

  std::string available;
  for (const std::string& n : fixture_names()) {
    if (!available.empty()) available += ", ";
    available += n;
  }
  throw Error(ErrorKind::UnknownFixture,
              "unknown fixture '" + name + "'; available: " + available);
}

}  // namespace causet
