#include "dsl.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace causet {

namespace {

enum class Tok {
  End,
  Ident,
  Int,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Assign,    // =
  Bang,      // !
  Amp,       // &
  Pipe,      // |
  Lt,
  Le,
  Gt,
  Ge,
  Ne,        // !=
  Arrow,     // <-
  FatArrow,  // =>
  DotDot,    // ..
  Plus,
  Minus,
  Star,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int column = 1;
};

const char* token_name(Tok kind) {
  switch (kind) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Assign: return "'='";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Ne: return "'!='";
    case Tok::Arrow: return "'<-'";
    case Tok::FatArrow: return "'=>'";
    case Tok::DotDot: return "'..'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
  }
  return "token";
}

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto newline = [&] {
    ++line;
    column = 1;
  };
  auto push = [&](Tok kind, std::string t, int l, int c) {
    Token tok;
    tok.kind = kind;
    tok.text = std::move(t);
    tok.line = l;
    tok.column = c;
    tokens.push_back(std::move(tok));
  };

  while (i < n) {
    char c = text[i];
    int l = line;
    int col = column;
    if (c == '\n') {
      ++i;
      newline();
      continue;
    }
    if (c == '\r') {
      ++i;
      if (i < n && text[i] == '\n') ++i;
      newline();
      continue;
    }
    if (c == ' ' || c == '\t') {
      ++i;
      ++column;
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < n && text[i + 1] == '/')) {
      while (i < n && text[i] != '\n' && text[i] != '\r') {
        ++i;
        ++column;
      }
      continue;
    }
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < n && ident_char(text[i])) {
        ++i;
        ++column;
      }
      push(Tok::Ident, text.substr(start, i - start), l, col);
      continue;
    }
    if (c >= '0' && c <= '9') {
      std::size_t start = i;
      while (i < n && text[i] >= '0' && text[i] <= '9') {
        ++i;
        ++column;
      }
      Token tok;
      tok.kind = Tok::Int;
      tok.text = text.substr(start, i - start);
      tok.line = l;
      tok.column = col;
      auto [ptr, ec] = std::from_chars(tok.text.data(),
                                       tok.text.data() + tok.text.size(),
                                       tok.value);
      if (ec != std::errc()) {
        throw ParseError(l, col, "integer literal '" + tok.text +
                                     "' is out of range");
      }
      tokens.push_back(std::move(tok));
      continue;
    }
    auto two = [&](char next) {
      return i + 1 < n && text[i + 1] == next;
    };
    switch (c) {
      case '{': push(Tok::LBrace, "{", l, col); break;
      case '}': push(Tok::RBrace, "}", l, col); break;
      case '(': push(Tok::LParen, "(", l, col); break;
      case ')': push(Tok::RParen, ")", l, col); break;
      case '[': push(Tok::LBracket, "[", l, col); break;
      case ']': push(Tok::RBracket, "]", l, col); break;
      case ',': push(Tok::Comma, ",", l, col); break;
      case ':': push(Tok::Colon, ":", l, col); break;
      case '+': push(Tok::Plus, "+", l, col); break;
      case '*': push(Tok::Star, "*", l, col); break;
      case '-': push(Tok::Minus, "-", l, col); break;
      case '&': push(Tok::Amp, "&", l, col); break;
      case '|': push(Tok::Pipe, "|", l, col); break;
      case '=':
        if (two('>')) {
          push(Tok::FatArrow, "=>", l, col);
          ++i;
          ++column;
        } else {
          push(Tok::Assign, "=", l, col);
        }
        break;
      case '!':
        if (two('=')) {
          push(Tok::Ne, "!=", l, col);
          ++i;
          ++column;
        } else {
          push(Tok::Bang, "!", l, col);
        }
        break;
      case '<':
        if (two('-')) {
          push(Tok::Arrow, "<-", l, col);
          ++i;
          ++column;
        } else if (two('=')) {
          push(Tok::Le, "<=", l, col);
          ++i;
          ++column;
        } else {
          push(Tok::Lt, "<", l, col);
        }
        break;
      case '>':
        if (two('=')) {
          push(Tok::Ge, ">=", l, col);
          ++i;
          ++column;
        } else {
          push(Tok::Gt, ">", l, col);
        }
        break;
      case '.':
        if (two('.')) {
          push(Tok::DotDot, "..", l, col);
          ++i;
          ++column;
        } else {
          throw ParseError(l, col, "unexpected character '.'");
        }
        break;
      default: {
        std::string shown = (c >= 0x20 && c < 0x7f)
                                ? std::string(1, c)
                                : "\\x" + std::to_string((unsigned char)c);
        throw ParseError(l, col, "unexpected character '" + shown + "'");
      }
    }
    ++i;
    ++column;
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = column;
  tokens.push_back(std::move(end));
  return tokens;
}

constexpr int kMaxDepth = 200;

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_keyword(const char* word) const {
    return at(Tok::Ident) && peek().text == word;
  }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(peek().line, peek().column, message);
  }
  [[noreturn]] void fail_at(const Token& tok, const std::string& message) const {
    throw ParseError(tok.line, tok.column, message);
  }

  Token expect(Tok kind, const char* what) {
    if (!at(kind)) {
      fail(std::string("expected ") + what + ", found " +
           describe(peek()));
    }
    return next();
  }
  Token expect_keyword(const char* word) {
    if (!at_keyword(word)) {
      fail(std::string("expected '") + word + "', found " + describe(peek()));
    }
    return next();
  }

  static std::string describe(const Token& tok) {
    if (tok.kind == Tok::Ident) return "'" + tok.text + "'";
    if (tok.kind == Tok::Int) return "'" + tok.text + "'";
    return token_name(tok.kind);
  }

  std::int64_t parse_signed_int() {
    bool negative = false;
    if (at(Tok::Minus)) {
      next();
      negative = true;
    }
    Token tok = expect(Tok::Int, "an integer");
    return negative ? -tok.value : tok.value;
  }

  // ---- expression grammar: | < & < comparison (non-assoc) < +- < * < unary
  Expr parse_expr() {
    DepthGuard guard(this);
    Expr lhs = parse_expr_and();
    while (at(Tok::Pipe)) {
      next();
      Expr rhs = parse_expr_and();
      lhs = Expr::make(ExprKind::Or, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ModelDocument parse_document_body() {
    ModelDocument doc;
    expect_keyword("model");
    Token name = expect(Tok::Ident, "a model name");
    doc.model.name = name.text;
    expect(Tok::LBrace, "'{'");

    expect_keyword("exogenous");
    parse_decl_block(doc.model, VarKind::Exogenous);
    expect_keyword("endogenous");
    parse_decl_block(doc.model, VarKind::Endogenous);

    expect_keyword("equations");
    expect(Tok::LBrace, "'{'");
    if (at(Tok::RBrace)) fail("equations block needs at least one equation");
    while (at(Tok::Ident)) {
      Token target = next();
      const Variable* v = doc.model.find(target.text);
      if (v == nullptr) {
        fail_at(target, "equation for undeclared variable '" + target.text + "'");
      }
      if (v->kind == VarKind::Exogenous) {
        fail_at(target,
                "equation for exogenous variable '" + target.text + "'");
      }
      if (doc.model.mechanism_for(target.text) != nullptr) {
        fail_at(target, "duplicate equation for '" + target.text + "'");
      }
      expect(Tok::Assign, "'='");
      Mechanism m;
      m.target = target.text;
      m.loc = {target.line, target.column};
      m.body = parse_expr();
      resolve_expr(doc.model, m.body);
      doc.model.mechanisms.push_back(std::move(m));
    }
    expect(Tok::RBrace, "'}'");

    if (at_keyword("ranking")) {
      next();
      doc.ranking = parse_ranking_block(doc.model);
    }
    expect(Tok::RBrace, "'}'");
    expect(Tok::End, "end of input");
    return doc;
  }

  CausalFormula parse_formula_body(const CausalModel& model) {
    CausalFormula f;
    if (at(Tok::LBracket)) {
      next();
      std::set<std::string> seen;
      for (;;) {
        Token var = expect(Tok::Ident, "an intervention variable");
        const Variable* v = model.find(var.text);
        if (v == nullptr) {
          fail_at(var, "unknown variable '" + var.text + "'");
        }
        if (v->kind == VarKind::Exogenous) {
          fail_at(var, "cannot intervene on exogenous variable '" + var.text +
                           "'");
        }
        if (!seen.insert(var.text).second) {
          fail_at(var, "duplicate intervention variable '" + var.text + "'");
        }
        expect(Tok::Arrow, "'<-'");
        Token before = peek();
        std::int64_t value = parse_signed_int();
        if (!model.in_range(var.text, value)) {
          fail_at(before, "value " + std::to_string(value) +
                              " is outside the range of '" + var.text + "'");
        }
        f.interventions.emplace_back(var.text, value);
        if (at(Tok::Comma)) {
          next();
          continue;
        }
        break;
      }
      expect(Tok::RBracket, "']'");
    }
    f.body = parse_bool_or(model);
    expect(Tok::End, "end of input");
    return f;
  }

  CauseCandidate parse_candidate_body(const CausalModel& model) {
    CauseCandidate candidate;
    std::set<std::string> seen;
    for (;;) {
      Token var = expect(Tok::Ident, "a variable name");
      const Variable* v = model.find(var.text);
      if (v == nullptr) fail_at(var, "unknown variable '" + var.text + "'");
      if (v->kind == VarKind::Exogenous) {
        fail_at(var, "cause candidate variable '" + var.text +
                         "' is exogenous");
      }
      if (!seen.insert(var.text).second) {
        fail_at(var, "duplicate variable '" + var.text + "'");
      }
      expect(Tok::Assign, "'='");
      Token before = peek();
      std::int64_t value = parse_signed_int();
      if (!model.in_range(var.text, value)) {
        fail_at(before, "value " + std::to_string(value) +
                            " is outside the range of '" + var.text + "'");
      }
      candidate.conjuncts.emplace_back(var.text, value);
      if (at(Tok::Amp) || at(Tok::Comma)) {
        next();
        continue;
      }
      break;
    }
    expect(Tok::End, "end of input");
    return candidate;
  }

  Context parse_context_body(const CausalModel& model) {
    Context context;
    while (!at(Tok::End)) {
      Token var = expect(Tok::Ident, "an exogenous variable name");
      const Variable* v = model.find(var.text);
      if (v == nullptr) fail_at(var, "unknown variable '" + var.text + "'");
      if (v->kind != VarKind::Exogenous) {
        fail_at(var, "context sets non-exogenous variable '" + var.text + "'");
      }
      if (context.count(var.text) != 0) {
        fail_at(var, "duplicate context variable '" + var.text + "'");
      }
      expect(Tok::Assign, "'='");
      Token before = peek();
      std::int64_t value = parse_signed_int();
      if (!model.in_range(var.text, value)) {
        fail_at(before, "value " + std::to_string(value) +
                            " is outside the range of '" + var.text + "'");
      }
      context[var.text] = value;
      if (at(Tok::Comma)) next();
    }
    return context;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser* p) : parser(p) {
      if (++parser->depth_ > kMaxDepth) {
        parser->fail("expression nests too deeply");
      }
    }
    ~DepthGuard() { --parser->depth_; }
    Parser* parser;
  };

  void parse_decl_block(CausalModel& model, VarKind kind) {
    expect(Tok::LBrace, "'{'");
    if (at(Tok::RBrace)) {
      fail(std::string(kind == VarKind::Exogenous ? "exogenous" : "endogenous") +
           " block needs at least one declaration");
    }
    while (at(Tok::Ident)) {
      Token name = next();
      if (model.find(name.text) != nullptr) {
        fail_at(name, "duplicate identifier '" + name.text + "'");
      }
      expect(Tok::Colon, "':'");
      Variable v;
      v.name = name.text;
      v.kind = kind;
      v.loc = {name.line, name.column};
      v.range = parse_range();
      model.variables.push_back(std::move(v));
    }
    expect(Tok::RBrace, "'}'");
  }

  std::vector<std::int64_t> parse_range() {
    Token open = expect(Tok::LBrace, "'{'");
    std::vector<std::int64_t> values;
    std::int64_t first = parse_signed_int();
    if (at(Tok::DotDot)) {
      next();
      std::int64_t last = parse_signed_int();
      if (last < first) {
        fail_at(open, "range {" + std::to_string(first) + ".." +
                          std::to_string(last) + "} is empty");
      }
      if (last - first >= (1 << 20)) {
        fail_at(open, "range spans too many values");
      }
      for (std::int64_t v = first; v <= last; ++v) values.push_back(v);
    } else {
      values.push_back(first);
      while (at(Tok::Comma)) {
        next();
        Token before = peek();
        std::int64_t v = parse_signed_int();
        for (std::int64_t prev : values) {
          if (prev == v) {
            fail_at(before,
                    "duplicate range value " + std::to_string(v));
          }
        }
        values.push_back(v);
      }
    }
    expect(Tok::RBrace, "'}'");
    std::sort(values.begin(), values.end());
    return values;
  }

  RankingFunction parse_ranking_block(const CausalModel& model) {
    RankingFunction ranking;
    expect(Tok::LBrace, "'{'");
    while (at_keyword("rule")) {
      next();
      RankingRule rule;
      for (;;) {
        Token var = expect(Tok::Ident, "a variable name");
        if (model.find(var.text) == nullptr) {
          fail_at(var, "unknown variable '" + var.text + "' in ranking pattern");
        }
        if (rule.pattern.count(var.text) != 0) {
          fail_at(var, "duplicate variable '" + var.text +
                           "' in ranking pattern");
        }
        expect(Tok::Assign, "'='");
        Token before = peek();
        std::int64_t value = parse_signed_int();
        if (!model.in_range(var.text, value)) {
          fail_at(before, "value " + std::to_string(value) +
                              " is outside the range of '" + var.text + "'");
        }
        rule.pattern[var.text] = value;
        if (at(Tok::Comma)) {
          next();
          continue;
        }
        break;
      }
      expect(Tok::FatArrow, "'=>'");
      rule.rank = parse_rank();
      ranking.rules.push_back(std::move(rule));
    }
    expect_keyword("default");
    expect(Tok::FatArrow, "'=>'");
    ranking.default_rank = parse_rank();
    expect(Tok::RBrace, "'}'");
    return ranking;
  }

  Rank parse_rank() {
    if (at_keyword("inf")) {
      next();
      return Rank::infinity();
    }
    Token tok = expect(Tok::Int, "a rank (a natural number or 'inf')");
    if (Rank::finite((std::uint64_t)tok.value).is_infinite()) {
      fail_at(tok, "rank is too large");
    }
    return Rank::finite((std::uint64_t)tok.value);
  }

  Expr parse_expr_and() {
    Expr lhs = parse_expr_cmp();
    while (at(Tok::Amp)) {
      next();
      Expr rhs = parse_expr_cmp();
      lhs = Expr::make(ExprKind::And, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr parse_expr_cmp() {
    Expr lhs = parse_expr_add();
    ExprKind kind;
    switch (peek().kind) {
      case Tok::Assign: kind = ExprKind::Eq; break;
      case Tok::Ne: kind = ExprKind::Ne; break;
      case Tok::Lt: kind = ExprKind::Lt; break;
      case Tok::Le: kind = ExprKind::Le; break;
      case Tok::Gt: kind = ExprKind::Gt; break;
      case Tok::Ge: kind = ExprKind::Ge; break;
      default: return lhs;
    }
    next();
    Expr rhs = parse_expr_add();
    switch (peek().kind) {
      case Tok::Assign:
      case Tok::Ne:
      case Tok::Lt:
      case Tok::Le:
      case Tok::Gt:
      case Tok::Ge:
        fail("comparisons do not chain; parenthesize one of them");
      default: break;
    }
    return Expr::make(kind, {std::move(lhs), std::move(rhs)});
  }

  Expr parse_expr_add() {
    Expr lhs = parse_expr_mul();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      ExprKind kind = at(Tok::Plus) ? ExprKind::Add : ExprKind::Sub;
      next();
      Expr rhs = parse_expr_mul();
      lhs = Expr::make(kind, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr parse_expr_mul() {
    Expr lhs = parse_expr_unary();
    while (at(Tok::Star)) {
      next();
      Expr rhs = parse_expr_unary();
      lhs = Expr::make(ExprKind::Mul, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr parse_expr_unary() {
    DepthGuard guard(this);
    if (at(Tok::Bang)) {
      Token tok = next();
      Expr operand = parse_expr_unary();
      Expr e = Expr::make(ExprKind::Not, {std::move(operand)});
      e.loc = {tok.line, tok.column};
      return e;
    }
    if (at(Tok::Minus)) {
      Token minus = next();
      Token tok = expect(Tok::Int, "an integer after unary '-'");
      Expr e = Expr::constant(-tok.value);
      e.loc = {minus.line, minus.column};
      return e;
    }
    return parse_expr_primary();
  }

  Expr parse_expr_primary() {
    if (at(Tok::Int)) {
      Token tok = next();
      Expr e = Expr::constant(tok.value);
      e.loc = {tok.line, tok.column};
      return e;
    }
    if (at(Tok::LParen)) {
      next();
      Expr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::Ident)) {
      Token tok = next();
      if (at(Tok::LParen) &&
          (tok.text == "max" || tok.text == "min" || tok.text == "if")) {
        next();
        std::vector<Expr> args;
        args.push_back(parse_expr());
        while (at(Tok::Comma)) {
          next();
          args.push_back(parse_expr());
        }
        expect(Tok::RParen, "')'");
        std::size_t arity = tok.text == "if" ? 3 : 2;
        if (args.size() != arity) {
          fail_at(tok, tok.text + " takes " + std::to_string(arity) +
                           " arguments, got " + std::to_string(args.size()));
        }
        ExprKind kind = tok.text == "max"  ? ExprKind::Max
                        : tok.text == "min" ? ExprKind::Min
                                            : ExprKind::If;
        Expr e = Expr::make(kind, std::move(args));
        e.loc = {tok.line, tok.column};
        return e;
      }
      Expr e = Expr::variable(tok.text);
      e.loc = {tok.line, tok.column};
      return e;
    }
    fail("expected an expression, found " + describe(peek()));
  }

  BoolFormula parse_bool_or(const CausalModel& model) {
    DepthGuard guard(this);
    BoolFormula lhs = parse_bool_and(model);
    while (at(Tok::Pipe)) {
      next();
      BoolFormula rhs = parse_bool_and(model);
      lhs = BoolFormula::make(BoolFormula::Kind::Or,
                              {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  BoolFormula parse_bool_and(const CausalModel& model) {
    BoolFormula lhs = parse_bool_not(model);
    while (at(Tok::Amp)) {
      next();
      BoolFormula rhs = parse_bool_not(model);
      lhs = BoolFormula::make(BoolFormula::Kind::And,
                              {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  BoolFormula parse_bool_not(const CausalModel& model) {
    DepthGuard guard(this);
    if (at(Tok::Bang)) {
      next();
      return BoolFormula::make(BoolFormula::Kind::Not,
                               {parse_bool_not(model)});
    }
    if (at(Tok::LParen)) {
      next();
      BoolFormula f = parse_bool_or(model);
      expect(Tok::RParen, "')'");
      return f;
    }
    Token var = expect(Tok::Ident, "a primitive event or '('");
    if (model.find(var.text) == nullptr) {
      fail_at(var, "unknown variable '" + var.text + "'");
    }
    expect(Tok::Assign, "'='");
    Token before = peek();
    std::int64_t value = parse_signed_int();
    if (!model.in_range(var.text, value)) {
      fail_at(before, "value " + std::to_string(value) +
                          " is outside the range of '" + var.text + "'");
    }
    return BoolFormula::leaf(var.text, value);
  }

  void resolve_expr(const CausalModel& model, const Expr& expr) {
    if (expr.kind == ExprKind::Variable && model.find(expr.var) == nullptr) {
      throw ParseError(expr.loc.line, expr.loc.column,
                       "unknown variable '" + expr.var + "'");
    }
    for (const Expr& a : expr.args) resolve_expr(model, a);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

std::string render_range(const std::vector<std::int64_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  out += "}";
  return out;
}

}  // namespace

ModelDocument parse_document(const std::string& text) {
  Parser parser(text);
  return parser.parse_document_body();
}

ModelDocument parse_model(const std::string& text) {
  ModelDocument doc = parse_document(text);
  std::vector<Violation> violations = validate_model(doc.model);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    SourceLoc loc{1, 1};
    if (const Mechanism* m = doc.model.mechanism_for(v.variable)) {
      loc = m->loc;
    } else if (const Variable* var = doc.model.find(v.variable)) {
      loc = var->loc;
    }
    throw ParseError(loc.line, loc.column, v.message);
  }
  return doc;
}

CausalFormula parse_formula(const std::string& text, const CausalModel& model) {
  Parser parser(text);
  return parser.parse_formula_body(model);
}

CauseCandidate parse_candidate(const std::string& text,
                               const CausalModel& model) {
  Parser parser(text);
  return parser.parse_candidate_body(model);
}

Context parse_context(const std::string& text, const CausalModel& model) {
  Parser parser(text);
  return parser.parse_context_body(model);
}

std::string print_model(const ModelDocument& doc) {
  std::string out = "model " + doc.model.name + " {\n";
  auto block = [&](const char* header, VarKind kind) {
    out += std::string("  ") + header + " {\n";
    for (const Variable& v : doc.model.variables) {
      if (v.kind != kind) continue;
      out += "    " + v.name + ": " + render_range(v.range) + "\n";
    }
    out += "  }\n";
  };
  block("exogenous", VarKind::Exogenous);
  block("endogenous", VarKind::Endogenous);
  out += "  equations {\n";
  for (const Mechanism& m : doc.model.mechanisms) {
    out += "    " + m.target + " = " + to_string(m.body) + "\n";
  }
  out += "  }\n";
  if (doc.ranking) {
    out += "  ranking {\n";
    for (const RankingRule& rule : doc.ranking->rules) {
      out += "    rule ";
      bool first = true;
      for (const auto& [var, value] : rule.pattern) {
        if (!first) out += ", ";
        first = false;
        out += var + " = " + std::to_string(value);
      }
      out += " => " + to_string(rule.rank) + "\n";
    }
    out += "    default => " + to_string(doc.ranking->default_rank) + "\n";
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace causet
