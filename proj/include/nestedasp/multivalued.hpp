#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nestedasp/options.hpp"
#include "nestedasp/program.hpp"

namespace nasp {

// Total map from a signature to {0, ..., arity-1} for the Goedel logic G_arity.
// Arity 2 is classical logic, arity 3 is G3.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(int arity, std::map<std::string, int> assignment);

  int arity() const noexcept { return arity_; }
  int top() const noexcept { return arity_ - 1; }
  const std::map<std::string, int>& assignment() const noexcept { return values_; }
  AtomSet signature() const;
  // Throws PreconditionError for atoms outside the signature.
  int operator[](const std::string& atom) const;
  bool isDefinite() const;

  // Atoms assigned `value`.
  AtomSet atomsWithValue(int value) const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
  friend auto operator<=>(const Interpretation&, const Interpretation&) = default;

 private:
  int arity_ = 2;
  std::map<std::string, int> values_;
};

// "a=1 b=2", atoms sorted.
std::string toString(const Interpretation& interp);
// Inverse of toString; the arity is given separately.
Interpretation parseInterpretation(std::string_view text, int arity);

int evalGi(const Formula& formula, const Interpretation& interp);
bool modelsGi(const Program& program, const Interpretation& interp);
bool modelsGi(std::span<const Formula> theory, const Interpretation& interp);

// Calls `visit` for each arity-valued model of the program over sigma in
// lexicographic assignment order (first atom most significant, values
// ascending); stops early when `visit` returns false. Throws
// ResourceLimitError past the enumeration cap for the arity.
void forEachModel(const Program& program, int arity, const AtomSet& sigma,
                  const std::function<bool(const Interpretation&)>& visit, const Options& options = {});
std::vector<Interpretation> enumerateModels(const Program& program, int arity, const AtomSet& sigma,
                                            const Options& options = {});

// theory |- goal in G_arity: the formula goal <- (conjunction of theory) is a
// tautology, i.e. min over the theory never exceeds the goal's value.
bool entailsGi(std::span<const Formula> theory, const Formula& goal, int arity, const Options& options = {});
bool isTautologyGi(const Formula& formula, int arity, const Options& options = {});

struct G3Verdict {
  bool equivalent = true;
  // A 3-valued interpretation modeling exactly one side.
  std::optional<Interpretation> witness;
  // 1 when the witness models p1 only, 2 when it models p2 only.
  int witnessModels = 0;
};

// Same set of 3-valued models over the union of both signatures.
G3Verdict g3Equivalent(const Program& p1, const Program& p2, const Options& options = {});

struct SidedInterpretation {
  Interpretation interpretation;
  int models = 0;  // 1 or 2: the only side it models
};
// Every 3-valued interpretation over the union signature that models
// exactly one of the programs.
std::vector<SidedInterpretation> g3Differences(const Program& p1, const Program& p2, const Options& options = {});

// 1 becomes 2; 0 and 2 stay. Requires arity 3.
Interpretation definiteCollapse(const Interpretation& interp);

// The context program T(I) for a 3-valued interpretation:
//   b <- a      for I(a) = I(b) = 1, a != b (both orientations)
//   a <- not a  for I(a) = 1
//   a           for I(a) = 2
//   :- a        for I(a) = 0
Program witnessProgram(const Interpretation& interp);

}  // namespace nasp
