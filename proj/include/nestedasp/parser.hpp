#pragma once

#include <string>
#include <string_view>

#include "nestedasp/errors.hpp"
#include "nestedasp/program.hpp"

namespace nasp {

struct ParseOptions {
  // Accept embedded "(F -> G)".
  bool arbitrary = false;
  // Accept reserved "__" atoms; the result is then an internal program.
  bool allowReserved = false;
};

// Grammar:
//   program := (clause | comment)*
//   clause  := formula? (":-" formula)? "."      at least one side
//   formula := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "not" unary | "(" formula ("->" formula)? ")" | atom | "bot" | "top"
// "%" starts a line comment. Throws SyntaxError.
Program parseProgram(std::string_view text, const ParseOptions& options = {});
Formula parseFormula(std::string_view text, const ParseOptions& options = {});

// Canonical text: one clause per line, facts without ":-", constraints as
// ":- body.", minimal parentheses under not > & > |.
std::string printProgram(const Program& program);
std::string printClause(const Clause& clause);
std::string printFormula(const Formula& formula);

}  // namespace nasp
