#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "nestedasp/errors.hpp"
#include "nestedasp/generators.hpp"
#include "nestedasp/multivalued.hpp"
#include "nestedasp/parser.hpp"
#include "nestedasp/prover.hpp"
#include "oracles.hpp"

using namespace nasp;

namespace {
Formula F(std::string_view t) { return parseFormula(t, {.arbitrary = true}); }
std::vector<Formula> T(std::initializer_list<const char*> xs) {
  std::vector<Formula> out;
  for (auto x : xs) out.push_back(F(x));
  return out;
}

Formula substitute(const Formula& f, const std::string& hole, const Formula& by) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return f.name() == hole ? by : f;
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::And: return Formula::conj(substitute(f.left(), hole, by), substitute(f.right(), hole, by));
    case Formula::Kind::Or: return Formula::disj(substitute(f.left(), hole, by), substitute(f.right(), hole, by));
    case Formula::Kind::Impl: return Formula::impl(substitute(f.left(), hole, by), substitute(f.right(), hole, by));
  }
  return f;
}

Formula positive(ProgramGenerator& g, const std::vector<std::string>& atoms, std::size_t depth) {
  if (depth == 0 || g.chance(30)) return Formula::atom(atoms[g.below(atoms.size())]);
  Formula l = positive(g, atoms, depth - 1), r = positive(g, atoms, depth - 1);
  switch (g.below(3)) {
    case 0: return Formula::conj(l, r);
    case 1: return Formula::disj(l, r);
    default: return Formula::impl(l, r);
  }
}

Formula twoNegated(ProgramGenerator& g, const std::vector<std::string>& atoms, std::size_t depth) {
  if (depth == 0 || g.chance(25)) return Formula::neg(Formula::neg(Formula::atom(atoms[g.below(atoms.size())])));
  Formula x = twoNegated(g, atoms, depth - 1);
  Formula other = g.anyFormula(atoms, 2);
  switch (g.below(5)) {
    case 0: return Formula::neg(Formula::neg(x));
    case 1: return Formula::conj(x, twoNegated(g, atoms, depth - 1));
    case 2: return Formula::disj(x, other);
    case 3: return Formula::disj(other, x);
    default: return Formula::impl(other, x);
  }
}

// Checks evidence for every judgment with the test-side oracles.
void certify(IntuitionisticProver& prover, const std::vector<Formula>& theory, const Formula& goal) {
  ProofJudgment j = prover.judge(theory, goal);
  if (j.provable) {
    CHECK(j.derivation);
    CHECK(entailsGi(theory, goal, 3));
  } else {
    REQUIRE(j.countermodel);
    CHECK(oracle::wellFormed(*j.countermodel));
    for (const auto& t : theory) CHECK(oracle::forces(*j.countermodel, 0, t));
    CHECK_FALSE(oracle::forces(*j.countermodel, 0, goal));
  }
}
}  // namespace

TEST_CASE("basic judgments") {
  CHECK_FALSE(provesI(T({"a | not a"}), F("a")).provable);
  CHECK(provesI(T({"a | not a", "not not a"}), F("a")).provable);
  CHECK_FALSE(provesI({}, F("a | not a")).provable);
  CHECK(entailsGi({}, F("a | not a"), 2));
  CHECK(provesI({}, F("not not (a | not a)")).provable);
}

TEST_CASE("excluded middle countermodel has two worlds") {
  auto j = provesI({}, F("a | not a"));
  REQUIRE(j.countermodel);
  CHECK(j.countermodel->worlds.size() == 2);
  CHECK(oracle::wellFormed(*j.countermodel));
  CHECK_FALSE(oracle::forces(*j.countermodel, 0, F("a | not a")));
  CHECK(j.countermodel->refutes({}, F("a | not a")));
}

TEST_CASE("consistency") {
  CHECK_FALSE(consistentI(T({"a", "not a"})));
  CHECK(consistentI({}));
}

TEST_CASE("consistency of the nested program extension") {
  // Clause formulas of the nested program written as implications.
  auto t = T({"(not not a -> a)", "(c | b -> not b)", "not b", "not c", "not not a"});
  CHECK(consistentI(t));
  CHECK(provesI(t, F("a")).provable);
}

TEST_CASE("literal completeness") {
  auto r1 = literalCompleteI(T({"(not a -> b)"}), {"a", "b"});
  CHECK_FALSE(r1.complete);
  CHECK(r1.undecided == AtomSet{"a", "b"});
  CHECK(literalCompleteI(T({"(not a -> b)", "not a"}), {"a", "b"}).complete);
  auto r3 = literalCompleteI(T({"(not a -> b)", "not b"}), {"a", "b"});
  CHECK_FALSE(r3.complete);
  CHECK(r3.undecided == AtomSet{"a"});
}

TEST_CASE("equivalence of theories") {
  CHECK(equivalentI(T({"not not not a"}), T({"not a"})));
  CHECK_FALSE(equivalentI(T({"a"}), T({"not not a"})));
  CHECK(equivalentI(T({"a & b", "c"}), T({"a & b", "c"})));
}

TEST_CASE("standard theorems and non-theorems") {
  for (auto s : {"(a -> a)", "((a & b) -> (b & a))", "((a -> b) -> ((b -> c) -> (a -> c)))", "(a -> not not a)",
                 "(not not not a -> not a)", "(not (a | b) -> not a & not b)", "((a | b) -> (b | a))",
                 "(((a -> b) -> a) -> not not a)", "not not ((not not a -> a))"})
    CHECK_MESSAGE(provesI({}, F(s)).provable, s);
  for (auto s : {"a | not a", "(not not a -> a)", "(((a -> b) -> a) -> a)", "(not (a & b) -> not a | not b)",
                 "((a -> b) | (b -> a))", "not a | not not a"})
    CHECK_FALSE_MESSAGE(provesI({}, F(s)).provable, s);
}

TEST_CASE("classifier") {
  auto t1 = classifyFormula(F("not not a"));
  CHECK(t1.isTwoNegated);
  CHECK_FALSE(t1.isPositive);
  CHECK(classifyFormula(F("a & (b | c)")).isPositive);
  CHECK(classifyFormula(F("not not a | (b -> bot)")).isTwoNegated);
  CHECK(classifyFormula(F("c | not not a")).isTwoNegated);
  CHECK(classifyFormula(F("(c -> not not a)")).isTwoNegated);
  CHECK_FALSE(classifyFormula(F("(not not a -> c)")).isTwoNegated);
  CHECK_FALSE(classifyFormula(F("not a")).isTwoNegated);
  CHECK_FALSE(classifyFormula(F("a | bot")).isPositive);
  auto pos = positiveSubset(T({"(b -> a)", "not c", "d"}));
  CHECK(pos == T({"(b -> a)", "d"}));
  CHECK(positiveSubset({}).empty());
}

TEST_CASE("budget is enforced per query") {
  IntuitionisticProver tiny(3);
  CHECK_THROWS_AS(tiny.proves(T({"(a -> b)", "(b -> c)", "(c -> d)", "a | e"}), F("d | e")), ResourceLimitError);
  IntuitionisticProver enough(1000000);
  CHECK(enough.proves(T({"(a -> b)", "(b -> c)", "(c -> d)", "a | e"}), F("d | e")));
}

TEST_CASE("evidence is certified on random queries") {
  ProgramGenerator gen(21);
  auto atoms = gen.atomNames(3);
  IntuitionisticProver prover;
  for (int n = 0; n < 300; ++n) {
    std::vector<Formula> theory;
    for (std::size_t k = gen.below(3); k > 0; --k) theory.push_back(gen.anyFormula(atoms, 2));
    certify(prover, theory, gen.anyFormula(atoms, 3));
  }
}

TEST_CASE("provability sits below G3 and classical entailment") {
  ProgramGenerator gen(23);
  auto atoms = gen.atomNames(3);
  for (int n = 0; n < 300; ++n) {
    std::vector<Formula> theory{gen.anyFormula(atoms, 2)};
    Formula goal = gen.anyFormula(atoms, 3);
    if (provesI(theory, goal).provable) {
      CHECK(entailsGi(theory, goal, 3));
      CHECK(entailsGi(theory, goal, 2));
      CHECK(provesI(theory, Formula::neg(Formula::neg(goal))).provable);
    }
    if (entailsGi(theory, goal, 3)) CHECK(entailsGi(theory, goal, 2));
  }
}

TEST_CASE("replacement of equivalents") {
  ProgramGenerator gen(29);
  auto atoms = gen.atomNames(3);
  std::vector<std::pair<std::string, std::string>> pairs{
      {"not not not x", "not x"}, {"x & y", "y & x"},         {"x | y", "y | x"},
      {"(x -> (y -> z))", "((x & y) -> z)"}, {"not (x | y)", "not x & not y"}, {"x", "x & x"},
      {"(x -> y & z)", "(x -> y) & (x -> z)"}, {"((x | y) -> z)", "(x -> z) & (y -> z)"}};
  std::size_t checked = 0;
  for (int n = 0; n < 200; ++n) {
    auto [fs, gs] = pairs[gen.below(pairs.size())];
    Formula f = F(fs), g = F(gs);
    for (const char* v : {"x", "y", "z"}) {
      Formula sub = gen.anyFormula(atoms, 1);
      f = substitute(f, v, sub);
      g = substitute(g, v, sub);
    }
    REQUIRE(equivalentI({&f, 1}, {&g, 1}));
    std::vector<std::string> withHole = atoms;
    withHole.push_back("hole");
    std::vector<Formula> t, t2;
    for (int k = 0; k < 2; ++k) {
      Formula ctx = gen.anyFormula(withHole, 3);
      t.push_back(substitute(ctx, "hole", f));
      t2.push_back(substitute(ctx, "hole", g));
    }
    CHECK(equivalentI(t, t2));
    ++checked;
  }
  CHECK(checked >= 200);
}

TEST_CASE("negative literals over a disjoint signature add nothing") {
  ProgramGenerator gen(31);
  std::vector<std::string> left{"a", "b"};
  std::size_t instances = 0;
  for (int n = 0; n < 400; ++n) {
    std::vector<Formula> t1{gen.anyFormula(left, 2), gen.anyFormula(left, 2)};
    std::vector<Formula> both = t1;
    for (const char* x : {"c", "d"})
      if (gen.chance(70)) both.push_back(Formula::neg(Formula::atom(x)));
    Formula goal = gen.anyFormula(left, 2);
    if (provesI(both, goal).provable) {
      CHECK(provesI(t1, goal).provable);
      ++instances;
    }
  }
  MESSAGE("lang instances with a provable premise: " << instances);
  CHECK(instances >= 100);
}

TEST_CASE("positive consequences need only the positive part") {
  ProgramGenerator gen(37);
  auto atoms = gen.atomNames(3);
  std::size_t instances = 0, provable = 0;
  for (int n = 0; n < 400; ++n) {
    std::vector<Formula> gamma;
    for (std::size_t k = 1 + gen.below(3); k > 0; --k) {
      Formula f = gen.chance(50) ? positive(gen, atoms, 2) : twoNegated(gen, atoms, 2);
      auto tags = classifyFormula(f);
      REQUIRE((tags.isPositive || tags.isTwoNegated));
      gamma.push_back(f);
    }
    Formula goal = positive(gen, atoms, 2);
    REQUIRE(classifyFormula(goal).isPositive);
    ++instances;
    if (provesI(gamma, goal).provable) {
      ++provable;
      CHECK(provesI(positiveSubset(gamma), goal).provable);
    }
  }
  MESSAGE("nonegs instances: " << instances << ", provable: " << provable);
  CHECK(provable >= 50);
}

TEST_CASE("cache persists across queries") {
  IntuitionisticProver prover;
  prover.proves(T({"a | b"}), F("b | a"));
  std::size_t n = prover.cachedSequents();
  CHECK(n > 0);
  prover.proves(T({"a | b"}), F("b | a"));
  CHECK(prover.cachedSequents() == n);
}
