#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nestedasp/options.hpp"
#include "nestedasp/program.hpp"
#include "nestedasp/prover.hpp"

namespace nasp {

// All result lists are ordered by cardinality, then lexicographically.
using AtomSets = std::vector<AtomSet>;

bool atomSetLess(const AtomSet& a, const AtomSet& b);
void sortAtomSets(AtomSets& sets);

enum class Method { Reduct, Intuitionistic, Both };
enum class SemanticsKind { Answer, MinAnswer, MinimalModel, MinimalAnswer };

std::string_view toString(Method m);
std::string_view toString(SemanticsKind s);

// X |= F for basic F. Throws PreconditionError for non-basic formulas.
bool satisfiesBasic(const AtomSet& x, const Formula& f);

// P^X: negated subformulas replaced by bottom or top. Requires an augmented
// program; the result is basic.
Program reduct(const Program& program, const AtomSet& x);

// X minimal among the sets closed under P^X.
AtomSets answerSetsReduct(const Program& program, const Options& options = {});

// M with P + not(sigma \ M) + not not M consistent and proving every atom
// of M. Accepts arbitrary programs.
AtomSets answerSetsIntuitionistic(const Program& program, const Options& options = {});

// Reduct route for augmented programs, intuitionistic route otherwise;
// both (compared) when options.checked.
AtomSets answerSets(const Program& program, const Options& options = {});

// Classical models minimal under inclusion. With options.checked the
// enumeration is compared with the provability criterion
// P + not(sigma \ M) |-~_C M.
AtomSets minimalModels(const Program& program, const Options& options = {});
// The provability route alone.
AtomSets minimalModelsByProvability(const Program& program, const Options& options = {});

// Answer sets that are also minimal models. For augmented programs the
// intuitionistic condition P + not(sigma \ M) |-~_I M is computed as well
// when options.checked and compared.
AtomSets minAnswerSets(const Program& program, const Options& options = {});
// P + not(sigma \ M) |-~_I M alone.
AtomSets minAnswerSetsIntuitionistic(const Program& program, const Options& options = {});

// Inclusion-minimal answer sets.
AtomSets minimalAnswerSets(const Program& program, const Options& options = {});

// M-bar = M + not(sigma \ M); checks P + not not M-bar |-~_I M-bar.
// Requires m to be a subset of the program signature.
bool safeBeliefs(const Program& program, const AtomSet& m, const Options& options = {});

// Single-candidate checks.
bool isAnswerSetReduct(const Program& program, const AtomSet& m, const Options& options = {});
bool isAnswerSetIntuitionistic(const Program& program, const AtomSet& m, const Options& options = {});
bool isMinimalModel(const Program& program, const AtomSet& m, const Options& options = {});

struct AnswerSetReport {
  AtomSet candidate;
  bool isAnswerSet = false;
  bool isMinimalModel = false;
  bool isMinAnswerSet = false;
  Method method = Method::Reduct;
  std::optional<Program> reduct;
};

AnswerSetReport analyze(const Program& program, const AtomSet& candidate, Method method, const Options& options = {});

// Dispatch used by the CLI.
AtomSets solve(const Program& program, SemanticsKind semantics, Method method, const Options& options = {});

// Candidate extension theories.
std::vector<Formula> answerSetTheory(const Program& program, const AtomSet& m);  // P + not M~ + not not M
std::vector<Formula> minAnswerTheory(const Program& program, const AtomSet& m);  // P + not M~

}  // namespace nasp
