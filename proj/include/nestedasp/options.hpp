#pragma once

#include <cstddef>

namespace nasp {

// Resource caps and checking mode shared by every module.
struct Options {
  // Largest signature enumerated with two truth values (subsets of sigma).
  std::size_t maxAtomsClassical = 20;
  // Largest signature enumerated with three or more truth values.
  std::size_t maxAtomsG3 = 12;
  // Sequents the intuitionistic prover may expand per query.
  std::size_t proverBudget = 1'000'000;
  // Clause budget for normal-form blowup in augToFree.
  std::size_t maxTransformClauses = 10'000;
  // Compute every semantics by two independent routes and fail on
  // disagreement.
  bool checked = false;
};

}  // namespace nasp
