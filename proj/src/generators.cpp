#include "nestedasp/generators.hpp"

namespace nasp {

std::size_t ProgramGenerator::below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }

bool ProgramGenerator::chance(unsigned percent) { return below(100) < percent; }

std::vector<std::string> ProgramGenerator::atomNames(std::size_t n) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

Formula ProgramGenerator::literal(const std::vector<std::string>& atoms, bool allowNeg) {
  Formula a = Formula::atom(atoms[below(atoms.size())]);
  return allowNeg && chance(40) ? Formula::neg(a) : a;
}

Formula ProgramGenerator::literalDisjunction(const std::vector<std::string>& atoms, bool allowNeg, std::size_t max) {
  Formula f = literal(atoms, allowNeg);
  for (std::size_t n = below(max); n > 0; --n) f = Formula::disj(f, literal(atoms, allowNeg));
  return f;
}

Formula ProgramGenerator::literalConjunction(const std::vector<std::string>& atoms, std::size_t max) {
  Formula f = literal(atoms, true);
  for (std::size_t n = below(max); n > 0; --n) f = Formula::conj(f, literal(atoms, true));
  return f;
}

Formula ProgramGenerator::formula(const std::vector<std::string>& atoms, std::size_t depth, bool impl) {
  if (depth == 0 || chance(30)) {
    if (chance(5)) return chance(50) ? Formula::bottom() : Formula::top();
    return Formula::atom(atoms[below(atoms.size())]);
  }
  switch (below(impl ? 4 : 3)) {
    case 0: return Formula::conj(formula(atoms, depth - 1, impl), formula(atoms, depth - 1, impl));
    case 1: return Formula::disj(formula(atoms, depth - 1, impl), formula(atoms, depth - 1, impl));
    case 2: return Formula::neg(formula(atoms, depth - 1, impl));
    default: return Formula::impl(formula(atoms, depth - 1, impl), formula(atoms, depth - 1, impl));
  }
}

Formula ProgramGenerator::anyFormula(const std::vector<std::string>& atoms, std::size_t depth) {
  if (depth == 0 || chance(25)) {
    if (chance(10)) return Formula::bottom();
    return Formula::atom(atoms[below(atoms.size())]);
  }
  Formula l = anyFormula(atoms, depth - 1);
  Formula r = anyFormula(atoms, depth - 1);
  switch (below(3)) {
    case 0: return Formula::conj(l, r);
    case 1: return Formula::disj(l, r);
    default: return Formula::impl(l, r);
  }
}

Clause ProgramGenerator::clause(const Shape& shape) {
  auto atoms = atomNames(shape.atoms);
  const std::size_t width = 3;
  switch (shape.target) {
    case ProgramClass::Basic: {
      auto basic = [&](auto&& self, std::size_t d) -> Formula {
        if (d == 0 || chance(35)) return Formula::atom(atoms[below(atoms.size())]);
        Formula l = self(self, d - 1), r = self(self, d - 1);
        return chance(50) ? Formula::conj(l, r) : Formula::disj(l, r);
      };
      Formula body = chance(30) ? Formula::top() : basic(basic, shape.maxDepth);
      return {basic(basic, shape.maxDepth), body};
    }
    case ProgramClass::Disjunctive:
    case ProgramClass::General:
    case ProgramClass::Free: {
      bool negHead = shape.target == ProgramClass::Free;
      bool constraint = shape.target != ProgramClass::Disjunctive && chance(20);
      Formula head = constraint ? Formula::bottom() : literalDisjunction(atoms, negHead, width);
      Formula body = chance(25) && !constraint ? Formula::top() : literalConjunction(atoms, width);
      return {head, body};
    }
    case ProgramClass::Augmented:
    case ProgramClass::Arbitrary: {
      bool impl = shape.target == ProgramClass::Arbitrary;
      Formula head = chance(15) ? Formula::bottom() : formula(atoms, shape.maxDepth, impl);
      Formula body = chance(20) ? Formula::top() : formula(atoms, shape.maxDepth, impl);
      return {head, body};
    }
  }
  return Clause::fact(Formula::atom(atoms[0]));
}

Program ProgramGenerator::program(const Shape& shape) {
  std::vector<Clause> clauses;
  std::size_t n = 1 + below(shape.maxClauses);
  for (std::size_t i = 0; i < n; ++i) clauses.push_back(clause(shape));
  return Program(std::move(clauses));
}

}  // namespace nasp
