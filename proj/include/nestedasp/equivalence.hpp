#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nestedasp/multivalued.hpp"
#include "nestedasp/options.hpp"
#include "nestedasp/program.hpp"
#include "nestedasp/semantics.hpp"
#include "nestedasp/transforms.hpp"

namespace nasp {

enum class Relation { Equivalent, StronglyEquivalent, ConservativeExtension, StrongConservativeExtension };
enum class Semantics { Answer, MinAnswer };

std::string_view toString(Relation r);
std::string_view toString(Semantics s);

// How a T(I) context separates the two sides under min-answer semantics:
//   Inconsistent: the side I models is consistent and complete, the other
//                 side is inconsistent.
//   Incomplete:   the side I models is incomplete and cannot be completed
//                 by negated atoms; the other side is consistent and complete.
enum class SeparationCase { None, Inconsistent, Incomplete };
std::string_view toString(SeparationCase c);

struct Witness {
  Program context;
  // Results of p1 + context and p2 + context.
  AtomSets left;
  AtomSets right;
  // "empty", "shape", "T(I)" or "bounded".
  std::string origin;
  std::optional<Interpretation> interpretation;
  SeparationCase separation = SeparationCase::None;
};

struct EquivalenceVerdict {
  Relation relation = Relation::Equivalent;
  Semantics semantics = Semantics::Answer;
  bool holds = true;
  std::optional<Witness> witness;
  // Bounded checks only hold up to `bound` context clauses.
  bool bounded = false;
  std::size_t bound = 0;
  std::size_t contextsChecked = 0;
  // Conservative extensions: each result of p2 with its restriction.
  std::vector<std::pair<AtomSet, AtomSet>> mapping;
};

// "equivalent" or "not-equivalent" and so on.
std::string verdictName(const EquivalenceVerdict& v);

// Answer sets or min-answer sets.
AtomSets resultsUnder(const Program& program, Semantics semantics, const Options& options = {});

EquivalenceVerdict equivalent(const Program& p1, const Program& p2, Semantics semantics, const Options& options = {});

// Decided by G3 equivalence. A failing verdict always carries a verified
// separating context: the empty context when the programs already differ,
// else a single clause b :- a or a :- not a, else T(I), else a bounded
// context.
EquivalenceVerdict stronglyEquivalent(const Program& p1, const Program& p2, Semantics semantics,
                                      const Options& options = {});

struct TWitness {
  Interpretation interpretation;
  // 1 when the interpretation models p1 only, 2 when p2 only.
  int modelsSide = 0;
  Program context;
  AtomSets left;
  AtomSets right;
  SeparationCase separation = SeparationCase::None;
  bool separates = false;
};

// T(I) for a 3-valued interpretation modeling exactly one side, definite
// ones preferred. nullopt when the programs are G3-equivalent.
std::optional<TWitness> tWitness(const Program& p1, const Program& p2, Semantics semantics,
                                 const Options& options = {});

// Case of the separation produced by `context`, computed with consistentI
// and literalCompleteI. `modeled` is the side the interpretation models.
SeparationCase separationCase(const Program& modeled, const Program& other, const Program& context,
                              const Options& options = {});

// Fixed context family over `pool`: every set of at most `k` distinct
// clauses from, in order, b :- a, a :- not a, a., a :- not b, a | b, :- a.
std::vector<Program> contextFamily(const AtomSet& pool, std::size_t k);

// A user atom not in `taken`.
std::string freshUserAtom(const AtomSet& taken);

// Checks equivalence under every context of the family over the union of
// both user signatures plus one fresh atom.
EquivalenceVerdict boundedStronglyEquivalent(const Program& p1, const Program& p2, Semantics semantics, std::size_t k,
                                             const Options& options = {});

// The restriction M2 -> M2 & sigma(p1) maps the answer sets of p2
// bijectively onto those of p1.
EquivalenceVerdict conservativeExtension(const Program& p1, const Program& p2, const Options& options = {});

// conservativeExtension(p1 + C, p2 + C) for every context C of the family
// over sigma(p1) plus one fresh user atom. Bounded: holds means no context
// up to size k falsifies it.
EquivalenceVerdict strongConservativeExtension(const Program& p1, const Program& p2, std::size_t k,
                                               const Options& options = {});

struct PipelineCheck {
  TransformResult transform;
  AtomSets answerSets;     // of the input, reduct route
  AtomSets outputResults;  // min-answer sets of the pipeline output
  std::vector<std::pair<AtomSet, AtomSet>> mapping;
  AtomSets restricted;
  bool holds = false;
};

// Runs the augmented-to-disjunctive pipeline and compares the restricted
// min-answer sets of the output with the answer sets of the input. Throws
// InternalError on mismatch when options.checked.
PipelineCheck pipelineRestriction(const Program& program, const Options& options = {});

}  // namespace nasp
