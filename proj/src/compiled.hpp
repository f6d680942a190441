#pragma once

// Flat, index-based form of a theory for fast truth-table evaluation.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nestedasp/formula.hpp"

namespace nasp::detail {

class CompiledTheory {
 public:
  CompiledTheory(std::span<const Formula> theory, const std::vector<std::string>& atoms);

  std::size_t rootCount() const { return roots_.size(); }

  // Goedel evaluation with truth values 0..top. Fills scratch; returns the
  // minimum over roots (top for an empty theory).
  int evalGodel(std::span<const std::uint8_t> values, int top) const;
  int evalGodelRoot(std::span<const std::uint8_t> values, int top, std::size_t root) const;

  // Strong Kleene evaluation on a partial classical assignment:
  // 0 false, 1 unknown, 2 true. Returns the minimum over roots.
  int evalKleene(std::span<const std::uint8_t> values) const;

 private:
  struct Op {
    Formula::Kind kind;
    int a = -1;  // atom index, or left operand
    int b = -1;  // right operand
  };
  int add(const Formula& f, const std::map<std::string, int>& index);

  std::vector<Op> ops_;
  std::vector<int> roots_;
  std::map<Formula, int> memo_;
  mutable std::vector<std::uint8_t> scratch_;
};

// Atoms of `sigma` in order.
std::vector<std::string> atomVector(const AtomSet& sigma);

// Searches for Y with Y a classical model of the compiled theory, where
// atoms outside `upper` are false and Y is a subset of `upper`. With
// `strict`, Y must differ from `upper`. Returns the model as a mask.
bool findSubsetModel(const CompiledTheory& theory, std::span<const std::uint8_t> upper, bool strict,
                     std::vector<std::uint8_t>* model = nullptr);

}  // namespace nasp::detail
