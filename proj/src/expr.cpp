#include "kgsentry/expr.hpp"

#include <algorithm>
#include <cctype>

#include "kgsentry/errors.hpp"

namespace kgsentry {

ExprPtr ClassExpression::thing() {
  static const ExprPtr instance(
      new ClassExpression(ExprKind::thing, "", nullptr, {}));
  return instance;
}

ExprPtr ClassExpression::atomic(std::string name) {
  return ExprPtr(new ClassExpression(ExprKind::atomic, std::move(name), nullptr, {}));
}

ExprPtr ClassExpression::negation(std::string atomic_name) {
  return ExprPtr(
      new ClassExpression(ExprKind::negation, std::move(atomic_name), nullptr, {}));
}

ExprPtr ClassExpression::existential(std::string property, ExprPtr filler) {
  return ExprPtr(new ClassExpression(ExprKind::existential, std::move(property),
                                     std::move(filler), {}));
}

int ClassExpression::compare(const ClassExpression& a, const ClassExpression& b) {
  auto rank = [](ExprKind k) {
    switch (k) {
      case ExprKind::thing: return 0;
      case ExprKind::atomic: return 1;
      case ExprKind::negation: return 2;
      case ExprKind::existential: return 3;
      case ExprKind::intersection: return 4;
    }
    return 5;
  };
  if (rank(a.kind_) != rank(b.kind_)) return rank(a.kind_) < rank(b.kind_) ? -1 : 1;
  switch (a.kind_) {
    case ExprKind::thing:
      return 0;
    case ExprKind::atomic:
    case ExprKind::negation:
      return a.name_.compare(b.name_) < 0 ? -1 : (a.name_ == b.name_ ? 0 : 1);
    case ExprKind::existential: {
      int c = a.name_.compare(b.name_);
      if (c != 0) return c < 0 ? -1 : 1;
      return compare(*a.filler_, *b.filler_);
    }
    case ExprKind::intersection: {
      std::size_t n = std::min(a.children_.size(), b.children_.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = compare(*a.children_[i], *b.children_[i]);
        if (c != 0) return c;
      }
      if (a.children_.size() == b.children_.size()) return 0;
      return a.children_.size() < b.children_.size() ? -1 : 1;
    }
  }
  return 0;
}

bool operator==(const ClassExpression& a, const ClassExpression& b) {
  return ClassExpression::compare(a, b) == 0;
}

ExprPtr ClassExpression::intersection(std::vector<ExprPtr> children) {
  std::vector<ExprPtr> flat;
  for (ExprPtr& c : children) {
    if (c->kind() == ExprKind::thing) continue;
    if (c->kind() == ExprKind::intersection)
      flat.insert(flat.end(), c->children().begin(), c->children().end());
    else
      flat.push_back(std::move(c));
  }
  std::sort(flat.begin(), flat.end(),
            [](const ExprPtr& a, const ExprPtr& b) { return compare(*a, *b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end(), expr_equal), flat.end());
  if (flat.empty()) return thing();
  if (flat.size() == 1) return flat[0];
  return ExprPtr(
      new ClassExpression(ExprKind::intersection, "", nullptr, std::move(flat)));
}

int ClassExpression::length() const {
  switch (kind_) {
    case ExprKind::thing: return 0;
    case ExprKind::atomic: return 1;
    case ExprKind::negation: return 2;  // the negation plus the atomic name
    case ExprKind::existential: return 1 + filler_->length();
    case ExprKind::intersection: {
      int sum = 0;
      for (const ExprPtr& c : children_) sum += c->length();
      return sum;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_rec(const ClassExpression& e, std::string& out, bool parenthesize) {
  switch (e.kind()) {
    case ExprKind::thing:
      out += "Thing";
      break;
    case ExprKind::atomic:
      out += e.name();
      break;
    case ExprKind::negation:
      if (parenthesize) out += '(';
      out += "not (";
      out += e.name();
      out += ')';
      if (parenthesize) out += ')';
      break;
    case ExprKind::existential: {
      if (parenthesize) out += '(';
      out += e.name();
      out += " some ";
      const ClassExpression& f = *e.filler();
      bool wrap = f.kind() != ExprKind::atomic && f.kind() != ExprKind::thing;
      print_rec(f, out, wrap);
      if (parenthesize) out += ')';
      break;
    }
    case ExprKind::intersection: {
      if (parenthesize) out += '(';
      bool first = true;
      for (const ExprPtr& c : e.children()) {
        if (!first) out += " and ";
        first = false;
        bool wrap = c->kind() == ExprKind::existential || c->kind() == ExprKind::negation;
        print_rec(*c, out, wrap);
      }
      if (parenthesize) out += ')';
      break;
    }
  }
}

}  // namespace

std::string print_manchester(const ExprPtr& expr) {
  std::string out;
  print_rec(*expr, out, false);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Type { name, kw_and, kw_some, kw_not, kw_thing, lparen, rparen, end };
  Type type;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::end, "", start};
      return;
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      current_ = {Token::lparen, "(", start};
      return;
    }
    if (c == ')') {
      ++pos_;
      current_ = {Token::rparen, ")", start};
      return;
    }
    if (!name_char(c))
      throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                           std::to_string(start),
                       start, "name, '(', ')'");
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (word == "and")
      current_ = {Token::kw_and, std::move(word), start};
    else if (word == "some")
      current_ = {Token::kw_some, std::move(word), start};
    else if (word == "not")
      current_ = {Token::kw_not, std::move(word), start};
    else if (word == "Thing")
      current_ = {Token::kw_thing, std::move(word), start};
    else
      current_ = {Token::name, std::move(word), start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Token::end, "", 0};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    const Token& t = lexer_.peek();
    if (t.type != Token::end)
      throw ParseError("trailing input at offset " + std::to_string(t.offset),
                       t.offset, "end of input");
    return e;
  }

 private:
  // expression := term ("and" term)*
  ExprPtr expression() {
    std::vector<ExprPtr> terms;
    terms.push_back(term());
    while (lexer_.peek().type == Token::kw_and) {
      lexer_.take();
      terms.push_back(term());
    }
    if (terms.size() == 1) return terms[0];
    return ClassExpression::intersection(std::move(terms));
  }

  // term := "not" primary | name "some" term | primary
  ExprPtr term() {
    const Token& t = lexer_.peek();
    if (t.type == Token::kw_not) {
      std::size_t at = t.offset;
      lexer_.take();
      ExprPtr inner = primary();
      if (inner->kind() != ExprKind::atomic)
        throw ParseError(
            "negation of a non-atomic expression at offset " + std::to_string(at), at,
            "atomic class name");
      return ClassExpression::negation(inner->name());
    }
    if (t.type == Token::name) {
      Token name_tok = lexer_.take();
      if (lexer_.peek().type == Token::kw_some) {
        lexer_.take();
        ExprPtr filler = term();
        return ClassExpression::existential(std::move(name_tok.text), std::move(filler));
      }
      return ClassExpression::atomic(std::move(name_tok.text));
    }
    return primary_from(t);
  }

  ExprPtr primary() { return primary_from(lexer_.peek()); }

  ExprPtr primary_from(const Token& t) {
    switch (t.type) {
      case Token::kw_thing:
        lexer_.take();
        return ClassExpression::thing();
      case Token::name: {
        Token tok = lexer_.take();
        return ClassExpression::atomic(std::move(tok.text));
      }
      case Token::lparen: {
        lexer_.take();
        ExprPtr e = expression();
        const Token& close = lexer_.peek();
        if (close.type != Token::rparen)
          throw ParseError("expected ')' at offset " + std::to_string(close.offset),
                           close.offset, "')'");
        lexer_.take();
        return e;
      }
      default:
        throw ParseError("unexpected token at offset " + std::to_string(t.offset),
                         t.offset, "name, 'Thing', 'not', '('");
    }
  }

  Lexer lexer_;
};

// Rebuild through the canonicalizing constructors so nested intersections
// from parenthesized input are flattened and sorted.
ExprPtr canonicalize(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::thing:
    case ExprKind::atomic:
    case ExprKind::negation:
      return e;
    case ExprKind::existential:
      return ClassExpression::existential(e->name(), canonicalize(e->filler()));
    case ExprKind::intersection: {
      std::vector<ExprPtr> children;
      children.reserve(e->children().size());
      for (const ExprPtr& c : e->children()) children.push_back(canonicalize(c));
      return ClassExpression::intersection(std::move(children));
    }
  }
  return e;
}

}  // namespace

ExprPtr parse_manchester(std::string_view text) {
  Parser p(text);
  return canonicalize(p.parse());
}

}  // namespace kgsentry
