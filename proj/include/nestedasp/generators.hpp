#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nestedasp/program.hpp"

namespace nasp {

// Random programs for property checks and the selftest. Only the raw engine
// output is used, so a seed gives the same programs on every platform.
class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::uint64_t seed) : rng_(seed) {}

  struct Shape {
    std::size_t atoms = 3;        // signature a, b, c, ...
    std::size_t maxClauses = 4;   // at least one clause
    std::size_t maxDepth = 2;     // connective nesting
    ProgramClass target = ProgramClass::Augmented;
  };

  Program program(const Shape& shape);
  Clause clause(const Shape& shape);
  // Formulas over and/or/not (and embedded implication when `impl`).
  Formula formula(const std::vector<std::string>& atoms, std::size_t depth, bool impl);
  // Arbitrary formula over and/or/implication/bottom, for prover checks.
  Formula anyFormula(const std::vector<std::string>& atoms, std::size_t depth);
  std::vector<std::string> atomNames(std::size_t n) const;

  std::size_t below(std::size_t n);  // uniform enough in [0, n)
  bool chance(unsigned percent);

 private:
  Formula literal(const std::vector<std::string>& atoms, bool allowNeg);
  Formula literalDisjunction(const std::vector<std::string>& atoms, bool allowNeg, std::size_t max);
  Formula literalConjunction(const std::vector<std::string>& atoms, std::size_t max);

  std::mt19937_64 rng_;
};

}  // namespace nasp
