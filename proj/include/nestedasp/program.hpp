#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nestedasp/formula.hpp"

namespace nasp {

// head <- body. Facts have body top, constraints have head bottom.
struct Clause {
  Formula head;
  Formula body;

  static Clause fact(Formula head) { return {std::move(head), Formula::top()}; }
  static Clause constraint(Formula body) { return {Formula::bottom(), std::move(body)}; }

  // The single formula the clause denotes: Impl(body, head).
  Formula formula() const { return Formula::impl(body, head); }
  bool isFact() const { return body.isTop(); }
  bool isConstraint() const { return head.isBottom(); }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;
};

// Inclusions: Disjunctive < General < Free < Augmented < Arbitrary and
// Basic < Augmented.
enum class ProgramClass { Basic, Disjunctive, General, Free, Augmented, Arbitrary };

std::string_view toString(ProgramClass c);
// True when every program of class `c` also belongs to `target`.
bool isWithin(ProgramClass c, ProgramClass target);

// Whether a program may mention reserved atoms.
enum class Origin { User, Internal };

class Program {
 public:
  Program() = default;
  // Throws PreconditionError when a user program mentions a reserved atom
  // or the declared signature misses an occurring atom.
  explicit Program(std::vector<Clause> clauses, std::optional<AtomSet> declaredSignature = std::nullopt,
                   Origin origin = Origin::User);

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  std::size_t size() const noexcept { return clauses_.size(); }
  bool empty() const noexcept { return clauses_.empty(); }
  const std::optional<AtomSet>& declaredSignature() const noexcept { return declared_; }
  Origin origin() const noexcept { return origin_; }
  bool isInternal() const noexcept { return origin_ == Origin::Internal; }

  // Duplicates removed, first occurrence order kept. All semantic
  // operations work on this view.
  std::vector<Clause> distinctClauses() const;
  std::vector<Formula> formulas() const;

  AtomSet occurringAtoms() const;
  // Effective signature: occurring atoms united with the declared ones.
  AtomSet signature() const;
  AtomSet userAtoms() const;
  AtomSet reservedAtoms() const;

  Program withDeclaredSignature(AtomSet sigma) const;
  Program withOrigin(Origin origin) const;
  // Clause lists concatenated; declared signatures united; internal if
  // either side is.
  Program united(const Program& other) const;

  // Same clause set (ignoring order and duplicates) and same signature.
  bool sameMeaningAs(const Program& other) const;

  friend bool operator==(const Program&, const Program&) = default;

 private:
  std::vector<Clause> clauses_;
  std::optional<AtomSet> declared_;
  Origin origin_ = Origin::User;
};

ProgramClass classify(const Program& program);
ProgramClass classifyClause(const Clause& clause);

// Atoms, bottom and top under and/or.
bool isBasicFormula(const Formula& f);
// Atoms and bottom under and/or/not (top is not bottom).
bool isNestedFormula(const Formula& f);

AtomSet signature(const Program& program);
// sigma \ m. Throws PreconditionError unless m is a subset of sigma.
AtomSet complementOf(const AtomSet& m, const AtomSet& sigma);

// A literal a or not a.
struct Literal {
  std::string atom;
  bool negated = false;

  Formula formula() const;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Free clause h1 | ... | hn :- b1 & ... & bm. Empty head is bottom, empty
// body is top.
struct FlatClause {
  std::vector<Literal> head;
  std::vector<Literal> body;

  Clause clause() const;
  friend bool operator==(const FlatClause&, const FlatClause&) = default;
};

// Decomposes a clause whose head is bottom or a disjunction of literals and
// whose body is top or a conjunction of literals.
std::optional<FlatClause> flatten(const Clause& clause);

}  // namespace nasp
