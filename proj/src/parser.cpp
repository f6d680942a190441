#include "nestedasp/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace nasp {

namespace {

enum class Tok { Atom, Reserved, Not, Bot, Top, And, Or, Arrow, If, LParen, RParen, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skipBlanks();
      SourceSpan span{pos_, pos_, line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", span});
        return out;
      }
      char c = text_[pos_];
      auto single = [&](Tok k, std::size_t len) {
        std::string t(text_.substr(pos_, len));
        advance(len);
        span.byteEnd = pos_;
        out.push_back({k, std::move(t), span});
      };
      if (c == '&') {
        single(Tok::And, 1);
      } else if (c == '|') {
        single(Tok::Or, 1);
      } else if (c == '(') {
        single(Tok::LParen, 1);
      } else if (c == ')') {
        single(Tok::RParen, 1);
      } else if (c == '.') {
        single(Tok::Dot, 1);
      } else if (c == ':' && peek(1) == '-') {
        single(Tok::If, 2);
      } else if (c == '-' && peek(1) == '>') {
        single(Tok::Arrow, 2);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = pos_;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
          ++end;
        std::string word(text_.substr(pos_, end - pos_));
        Tok k = Tok::Atom;
        if (word == "not") {
          k = Tok::Not;
        } else if (word == "bot") {
          k = Tok::Bot;
        } else if (word == "top") {
          k = Tok::Top;
        } else if (isReservedAtomName(word) && word.size() > kReservedPrefix.size()) {
          k = Tok::Reserved;
        } else if (!isUserAtomName(word)) {
          span.byteEnd = end;
          throw SyntaxError("invalid atom identifier '" + word + "' (atoms match [a-z][A-Za-z0-9_]*)", span);
        }
        single(k, end - pos_);
      } else {
        span.byteEnd = pos_ + 1;
        throw SyntaxError(std::string("unexpected character '") + c + "'", span);
      }
    }
  }

 private:
  char peek(std::size_t off) const { return pos_ + off < text_.size() ? text_[pos_ + off] : '\0'; }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void skipBlanks() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options) : toks_(std::move(tokens)), opts_(options) {}

  Program program() {
    std::vector<Clause> clauses;
    while (cur().kind != Tok::End) clauses.push_back(clause());
    bool reserved = false;
    for (const auto& c : clauses)
      for (const auto& a : c.formula().atoms()) reserved = reserved || isReservedAtomName(a);
    return Program(std::move(clauses), std::nullopt, reserved ? Origin::Internal : Origin::User);
  }

  Formula lone() {
    Formula f = formula();
    if (cur().kind != Tok::End) fail("unexpected '" + cur().text + "' after formula");
    return f;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, cur().span); }

  Clause clause() {
    std::optional<Formula> head, body;
    if (cur().kind == Tok::Dot) fail("empty clause");
    if (cur().kind != Tok::If) head = formula();
    if (cur().kind == Tok::If) {
      ++pos_;
      if (cur().kind == Tok::Dot) fail("expected a body after ':-'");
      body = formula();
    }
    if (cur().kind != Tok::Dot) fail(cur().kind == Tok::End ? "missing '.' at end of clause" : "expected '.', got '" + cur().text + "'");
    ++pos_;
    return {head.value_or(Formula::bottom()), body.value_or(Formula::top())};
  }

  Formula formula() {
    Formula acc = conjunction();
    while (cur().kind == Tok::Or) {
      ++pos_;
      acc = Formula::disj(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (cur().kind == Tok::And) {
      ++pos_;
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Not:
        ++pos_;
        return Formula::neg(unary());
      case Tok::Bot:
        ++pos_;
        return Formula::bottom();
      case Tok::Top:
        ++pos_;
        return Formula::top();
      case Tok::Atom:
        ++pos_;
        return Formula::atom(t.text);
      case Tok::Reserved:
        if (!opts_.allowReserved) fail("reserved atom '" + t.text + "' is not allowed in user programs");
        ++pos_;
        return Formula::atom(t.text);
      case Tok::LParen: {
        ++pos_;
        Formula inner = formula();
        if (cur().kind == Tok::Arrow) {
          if (!opts_.arbitrary) fail("embedded implication '->' requires arbitrary mode");
          ++pos_;
          Formula consequent = formula();
          inner = Formula::impl(inner, consequent);
        }
        if (cur().kind != Tok::RParen) fail("expected ')'");
        ++pos_;
        return inner;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

// Binding strength: | = 1, & = 2, not and leaves = 3.
int strength(const Formula& f) {
  if (f.isOr()) return 1;
  if (f.isAnd()) return 2;
  return 3;
}

void print(const Formula& f, std::string& out);

void printOperand(const Formula& f, int minStrength, std::string& out) {
  bool paren = strength(f) < minStrength;
  if (paren) out += '(';
  print(f, out);
  if (paren) out += ')';
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      return;
    case Formula::Kind::Bottom:
      out += "bot";
      return;
    case Formula::Kind::And:
      // Left-associative: a right operand of equal strength needs parentheses.
      printOperand(f.left(), 2, out);
      out += " & ";
      printOperand(f.right(), 3, out);
      return;
    case Formula::Kind::Or:
      printOperand(f.left(), 1, out);
      out += " | ";
      printOperand(f.right(), 2, out);
      return;
    case Formula::Kind::Impl:
      if (f.isTop()) {
        out += "top";
      } else if (f.isNeg()) {
        out += "not ";
        printOperand(f.negand(), 3, out);
      } else {
        out += '(';
        print(f.antecedent(), out);
        out += " -> ";
        print(f.consequent(), out);
        out += ')';
      }
      return;
  }
}

}  // namespace

Program parseProgram(std::string_view text, const ParseOptions& options) {
  return Parser(Lexer(text).run(), options).program();
}

Formula parseFormula(std::string_view text, const ParseOptions& options) {
  return Parser(Lexer(text).run(), options).lone();
}

std::string printFormula(const Formula& formula) {
  std::string out;
  print(formula, out);
  return out;
}

std::string printClause(const Clause& clause) {
  std::string out;
  if (clause.isConstraint() && !clause.isFact()) {
    out = ":- " + printFormula(clause.body);
  } else if (clause.isFact()) {
    out = printFormula(clause.head);
  } else {
    out = printFormula(clause.head) + " :- " + printFormula(clause.body);
  }
  return out + ".";
}

std::string printProgram(const Program& program) {
  std::string out;
  for (const auto& c : program.clauses()) out += printClause(c) + "\n";
  return out;
}

}  // namespace nasp
