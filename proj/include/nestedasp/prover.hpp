#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "nestedasp/options.hpp"
#include "nestedasp/program.hpp"

namespace nasp {

// Finite rooted Kripke model. Worlds form a tree rooted at world 0; the
// order is the reflexive-transitive closure of the successor edges.
struct KripkeModel {
  struct World {
    AtomSet atoms;
    std::vector<std::size_t> successors;
  };
  std::vector<World> worlds;

  bool forces(std::size_t world, const Formula& f) const;
  // Tree shape and monotone valuation.
  bool isWellFormed() const;
  // Root forces every theory member and not the goal.
  bool refutes(std::span<const Formula> theory, const Formula& goal) const;
};

std::string toString(const KripkeModel& model);

// G4ip derivation. `rule` names the inference applied to `sequent`.
struct Derivation {
  std::string rule;
  std::string sequent;
  std::vector<std::shared_ptr<const Derivation>> premises;
};

std::string toString(const Derivation& derivation);

struct ProofJudgment {
  std::vector<Formula> theory;
  Formula goal;
  bool provable = false;
  std::shared_ptr<const Derivation> derivation;  // when provable
  std::optional<KripkeModel> countermodel;       // when not provable
};

struct LiteralCompleteness {
  bool complete = true;
  AtomSet undecided;
};

// Decision procedure for propositional intuitionistic logic: Dyckhoff's
// contraction-free sequent calculus with sequent caching. Unprovable
// sequents yield a verified Kripke countermodel on request. A single
// instance is not thread-safe; its cache persists across queries.
class IntuitionisticProver {
 public:
  explicit IntuitionisticProver(std::size_t budget = Options{}.proverBudget);

  // theory |-_I goal. Throws ResourceLimitError when the query expands more
  // than `budget` new sequents.
  bool proves(std::span<const Formula> theory, const Formula& goal);
  bool provesAll(std::span<const Formula> theory, std::span<const Formula> goals);
  // Like proves, with a derivation or a minimized countermodel attached.
  ProofJudgment judge(std::span<const Formula> theory, const Formula& goal);

  bool consistent(std::span<const Formula> theory);
  LiteralCompleteness literalComplete(std::span<const Formula> theory, const AtomSet& sigma);
  bool equivalent(std::span<const Formula> t1, std::span<const Formula> t2);

  std::size_t cachedSequents() const { return memo_.size(); }

 private:
  using Id = int;
  struct Node {
    Formula::Kind kind;
    Id left = -1;
    Id right = -1;
    std::string name;
  };
  using Gamma = std::vector<Id>;  // sorted, unique

  Id intern(const Formula& f);
  Id make(Formula::Kind kind, Id left, Id right, const std::string& name = {});
  Formula rebuild(Id id) const;
  std::string show(Id id) const;
  std::string show(const Gamma& gamma, Id goal) const;

  static Gamma with(Gamma g, std::initializer_list<Id> add);
  static Gamma without(const Gamma& g, Id remove);
  bool contains(const Gamma& g, Id id) const;

  // One step of the calculus; what search() and the evidence builders share.
  struct Step {
    enum Kind { Axiom, LeftSingle, LeftBranch, RightSingle, RightBranch, Irreducible } kind;
    std::string rule;
    Gamma g1, g2;
    Id goal1 = -1, goal2 = -1;
  };
  Step step(const Gamma& gamma, Id goal);

  bool provable(const Gamma& gamma, Id goal);
  bool search(const Gamma& gamma, Id goal);
  Gamma load(std::span<const Formula> theory);

  std::shared_ptr<const Derivation> derive(const Gamma& gamma, Id goal);
  KripkeModel refute(const Gamma& gamma, Id goal);

  std::vector<Node> nodes_;
  std::map<std::tuple<int, Id, Id, std::string>, Id> index_;
  struct KeyHash {
    std::size_t operator()(const std::vector<Id>& key) const noexcept;
  };
  std::unordered_map<std::vector<Id>, bool, KeyHash> memo_;
  std::size_t budget_;
  std::size_t spent_ = 0;
  Id bottom_;
};

// Convenience wrappers using a fresh prover.
ProofJudgment provesI(std::span<const Formula> theory, const Formula& goal, const Options& options = {});
bool provesAllI(std::span<const Formula> theory, std::span<const Formula> goals, const Options& options = {});
bool consistentI(std::span<const Formula> theory, const Options& options = {});
LiteralCompleteness literalCompleteI(std::span<const Formula> theory, const AtomSet& sigma, const Options& options = {});
bool equivalentI(std::span<const Formula> t1, std::span<const Formula> t2, const Options& options = {});

// Classes from the positivity argument for answer sets.
struct FormulaClassTags {
  // No bottom node at all, so no negation and no top.
  bool isPositive = false;
  // Least set containing not not a, closed under not not, binary and of
  // members, or with a member on either side, and implication whose
  // consequent is a member.
  bool isTwoNegated = false;
};

FormulaClassTags classifyFormula(const Formula& f);
std::vector<Formula> positiveSubset(std::span<const Formula> gamma);

}  // namespace nasp
