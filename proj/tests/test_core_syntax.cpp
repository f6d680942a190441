#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nestedasp/errors.hpp"
#include "nestedasp/formula.hpp"
#include "nestedasp/parser.hpp"
#include "nestedasp/program.hpp"

using namespace nasp;

namespace {
Formula A(const char* n) { return Formula::atom(n); }
Program P(std::string_view t) { return parseProgram(t, {.arbitrary = true}); }
}  // namespace

TEST_CASE("abbreviations desugar to the four connectives") {
  CHECK(Formula::top() == Formula::impl(Formula::bottom(), Formula::bottom()));
  CHECK(Formula::neg(A("a")) == Formula::impl(A("a"), Formula::bottom()));
  CHECK(Formula::iff(A("a"), A("b")) ==
        Formula::conj(Formula::impl(A("a"), A("b")), Formula::impl(A("b"), A("a"))));
  CHECK(Formula::top().isTop());
  CHECK(Formula::neg(A("a")).isNeg());
  CHECK(Formula::neg(Formula::neg(A("a"))).isDoubleNegatedAtom());
  CHECK_FALSE(Formula::neg(A("a")).isDoubleNegatedAtom());
}

TEST_CASE("folds") {
  CHECK(Formula::conjAll({}) == Formula::top());
  CHECK(Formula::disjAll({}) == Formula::bottom());
  std::vector<Formula> xs{A("a"), A("b"), A("c")};
  CHECK(Formula::conjAll(xs) == Formula::conj(Formula::conj(A("a"), A("b")), A("c")));
}

TEST_CASE("atoms and structural identity") {
  Formula f = Formula::disj(Formula::neg(A("b")), Formula::conj(A("a"), A("b")));
  CHECK(f.atoms() == AtomSet{"a", "b"});
  CHECK(Formula::bottom().atoms().empty());
  CHECK(f == Formula::disj(Formula::neg(A("b")), Formula::conj(A("a"), A("b"))));
  CHECK(f != Formula::disj(Formula::conj(A("a"), A("b")), Formula::neg(A("b"))));
  CHECK(f.hash() == Formula::disj(Formula::neg(A("b")), Formula::conj(A("a"), A("b"))).hash());
}

TEST_CASE("atom names") {
  CHECK(isUserAtomName("a"));
  CHECK(isUserAtomName("foo_Bar9"));
  CHECK_FALSE(isUserAtomName("not"));
  CHECK_FALSE(isUserAtomName("top"));
  CHECK_FALSE(isUserAtomName("Abc"));
  CHECK_FALSE(isUserAtomName("__x"));
  CHECK(isReservedAtomName("__not_a"));
}

TEST_CASE("classify follows the class table") {
  CHECK(classify(P("a | b :- c & d & not e.")) == ProgramClass::Disjunctive);
  CHECK(classify(P(":- p & q.")) == ProgramClass::General);
  CHECK(classify(P("a | not b :- p & not q.")) == ProgramClass::Free);
  CHECK(classify(P("not (a & not b) :- c.")) == ProgramClass::Augmented);
  CHECK(classify(P("a :- (b -> c).")) == ProgramClass::Arbitrary);
  CHECK(classify(P("a & b :- c | d.")) == ProgramClass::Basic);
  CHECK(classify(P("a :- not not a.")) == ProgramClass::Augmented);
}

TEST_CASE("class inclusions") {
  CHECK(isWithin(ProgramClass::Disjunctive, ProgramClass::General));
  CHECK(isWithin(ProgramClass::General, ProgramClass::Free));
  CHECK(isWithin(ProgramClass::Free, ProgramClass::Augmented));
  CHECK(isWithin(ProgramClass::Augmented, ProgramClass::Arbitrary));
  CHECK(isWithin(ProgramClass::Basic, ProgramClass::Augmented));
  CHECK_FALSE(isWithin(ProgramClass::Basic, ProgramClass::Free));
  CHECK_FALSE(isWithin(ProgramClass::General, ProgramClass::Disjunctive));
}

TEST_CASE("signature") {
  CHECK(signature(P("a :- not not a. not b :- c | b.")) == AtomSet{"a", "b", "c"});
  CHECK(Program({}, AtomSet{"x"}).signature() == AtomSet{"x"});
  CHECK(signature(Program({Clause::constraint(Formula::top())})).empty());
  CHECK_THROWS_AS(Program({Clause::fact(A("a"))}, AtomSet{"b"}), PreconditionError);
}

TEST_CASE("complement") {
  AtomSet sigma{"a", "b", "c"};
  CHECK(complementOf({"a"}, sigma) == AtomSet{"b", "c"});
  CHECK(complementOf({}, sigma) == sigma);
  CHECK(complementOf(sigma, sigma).empty());
  CHECK_THROWS_AS(complementOf({"d"}, sigma), PreconditionError);
}

TEST_CASE("user programs reject reserved atoms") {
  CHECK_THROWS_AS(Program({Clause::fact(A("__p"))}), PreconditionError);
  Program internal({Clause::fact(A("__p"))}, std::nullopt, Origin::Internal);
  CHECK(internal.reservedAtoms() == AtomSet{"__p"});
  CHECK(internal.userAtoms().empty());
}

TEST_CASE("duplicates are ignored for meaning, kept for printing") {
  Program p = P("a. a. b :- a.");
  CHECK(p.size() == 3);
  CHECK(p.distinctClauses().size() == 2);
  CHECK(p.sameMeaningAs(P("b :- a. a.")));
  CHECK_FALSE(p.sameMeaningAs(P("a.")));
}

TEST_CASE("united merges clauses and signatures") {
  Program a({Clause::fact(A("a"))}, AtomSet{"a", "z"});
  Program b = P("b :- a.");
  Program u = a.united(b);
  CHECK(u.size() == 2);
  CHECK(u.signature() == AtomSet{"a", "b", "z"});
}

TEST_CASE("flatten free clauses") {
  auto f = flatten(P("a | not b :- c & not d.").clauses()[0]);
  REQUIRE(f);
  CHECK(f->head == std::vector<Literal>{{"a", false}, {"b", true}});
  CHECK(f->body == std::vector<Literal>{{"c", false}, {"d", true}});
  CHECK(f->clause() == P("a | not b :- c & not d.").clauses()[0]);
  auto c = flatten(P(":- a.").clauses()[0]);
  REQUIRE(c);
  CHECK(c->head.empty());
  CHECK_FALSE(flatten(P("a :- not not b.").clauses()[0]));
}
