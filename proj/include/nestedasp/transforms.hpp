#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nestedasp/options.hpp"
#include "nestedasp/program.hpp"

namespace nasp {

// Issues reserved atoms. The map from source atoms to their replacements is
// injective and no issued name collides with a reserved or previously
// issued one.
class FreshAtomRegistry {
 public:
  FreshAtomRegistry() = default;

  // Marks atoms as taken.
  void reserve(const AtomSet& atoms);
  // The reserved atom standing for "not atom"; stable across calls.
  const std::string& replacementFor(const std::string& atom);
  // The single atom used to encode constraints.
  const std::string& constraintAtom();

  const std::map<std::string, std::string>& replacements() const { return phi_; }
  const std::optional<std::string>& issuedConstraintAtom() const { return constraint_; }
  AtomSet issued() const;

 private:
  std::string issue(const std::string& stem);

  std::map<std::string, std::string> phi_;
  std::optional<std::string> constraint_;
  AtomSet taken_;
  std::size_t counter_ = 0;
};

struct TransformStage {
  std::string name;
  Program input;
  Program output;
  FreshAtomRegistry registry;
};

using TransformTrace = std::vector<TransformStage>;

struct TransformResult {
  Program program;
  FreshAtomRegistry registry;
  TransformTrace trace;
};

// Augmented -> free, strongly equivalent (checked clause by clause in G3
// with options.checked). Per clause: negations pushed onto atoms, head to
// CNF and body to DNF, conjunctive heads and disjunctive bodies split,
// then
//   A | not not B :- C   =>  A :- not B & C
//   A :- not not B & C   =>  A | not B :- C
// Throws PreconditionError for non-augmented input, ResourceLimitError
// past options.maxTransformClauses.
TransformResult augToFree(const Program& program, const Options& options = {});

// Free -> general. Every "not a" with a negated in some head becomes a
// reserved atom phi(a), and phi(a) :- not a.  :- a & phi(a). are added.
TransformResult freeToGen(const Program& program, FreshAtomRegistry registry = {}, const Options& options = {});

// General -> disjunctive: each constraint :- B becomes p :- B & not p for
// one shared reserved atom p.
TransformResult genToDisj(const Program& program, FreshAtomRegistry registry = {}, const Options& options = {});

// genToDisj . freeToGen . augToFree with the full trace.
TransformResult augToDisjPipeline(const Program& program, const Options& options = {});

// First reduction relative to the negated atoms `negated`: drop body
// literals not a, drop head atoms a, drop clauses with a positive body atom
// a, for a in `negated`. Requires a general program.
Program redu1(const Program& program, const AtomSet& negated);

// Second reduction relative to the doubly negated atoms `doubleNegated`:
// constraints lose positive body atoms a; clauses with a body literal
// not a are dropped, for a in `doubleNegated`. Requires a general program.
Program redu2(const Program& program, const AtomSet& doubleNegated);

}  // namespace nasp
