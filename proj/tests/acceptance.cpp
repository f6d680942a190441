// One PASS/FAIL line per acceptance criterion. argv[1]: path of the CLI.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>

#include "nestedasp/equivalence.hpp"
#include "nestedasp/generators.hpp"
#include "nestedasp/multivalued.hpp"
#include "nestedasp/parser.hpp"
#include "nestedasp/prover.hpp"
#include "nestedasp/semantics.hpp"
#include "nestedasp/transforms.hpp"
#include "oracles.hpp"

using namespace nasp;

namespace {
using Sets = AtomSets;
Program P(std::string_view t) { return parseProgram(t, {.arbitrary = true, .allowReserved = true}); }
Formula F(std::string_view t) { return parseFormula(t, {.arbitrary = true}); }
std::string S(const Program& p) { return printProgram(p); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

Sets restrictAll(const Sets& sets, const AtomSet& sigma) {
  Sets out;
  for (const auto& m : sets) {
    AtomSet x;
    for (const auto& a : m)
      if (sigma.count(a)) x.insert(a);
    out.push_back(x);
  }
  sortAtomSets(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Formula> plus(std::vector<Formula> a, const std::vector<Formula>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Formula> negs(const AtomSet& m) {
  std::vector<Formula> out;
  for (const auto& a : m) out.push_back(Formula::neg(Formula::atom(a)));
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

std::pair<int, std::string> runCli(const std::string& cli, const std::string& args) {
  std::string out;
  FILE* pipe = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, ""};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Shared corpus for criteria 4 and 5.
std::vector<Program> corpus() {
  ProgramGenerator gen(2024);
  std::vector<Program> out;
  for (int n = 0; n < 500; ++n)
    out.push_back(gen.program({.atoms = 1 + gen.below(4), .maxClauses = 5, .maxDepth = 2,
                               .target = ProgramClass::Augmented}));
  return out;
}

void criterion1(Outcome& o) {
  Program nested = P("a :- not not a. not b :- c | b.");
  auto t0 = std::chrono::steady_clock::now();
  Sets reduct = answerSetsReduct(nested);
  Sets intuitionistic = answerSetsIntuitionistic(nested);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  o.require(reduct == Sets{{}, {"a"}}, "reduct route");
  o.require(intuitionistic == Sets{{}, {"a"}}, "intuitionistic route");
  o.require(reduct == oracle::answerSets(nested), "oracle");
  o.require(ms < 1000, "runtime");
  o.detail << (o.pass ? "" : "; ") << "answer sets {} and {a} by both routes in " << ms << " ms";
}

void criterion2(Outcome& o) {
  Program in = P("not (a & not b) & c :- d & (e | not f).");
  Program out = augToFree(in).program;
  o.require(S(out) == S(P("not a :- not b & d & e. not a :- not b & d & not f. c :- d & e. c :- d & not f.")),
            "output text");
  o.require(out.size() == 4, "clause count");
  o.require(g3Equivalent(in, out).equivalent, "G3 equivalence");
  o.require(oracle::g3Equivalent(in, out), "G3 oracle");
  o.detail << (o.pass ? "" : "; ") << out.size() << " clauses, G3-equivalent";
}

void criterion3(Outcome& o) {
  o.require(S(augToFree(P("a :- not not a. not b :- c | b.")).program) == S(P("a | not a. not b :- c. not b :- b.")),
            "AugFree of nested program");
  Sets fg = answerSetsReduct(freeToGen(P("a | not a.")).program);
  o.require(fg == Sets{{"__not_a"}, {"a"}}, "FreeGen answer sets");
  auto r = augToDisjPipeline(P("a :- not not a. not b :- c | b."));
  // x = __not_a, y = __not_b, p = __p
  Program p3 = P("a | __not_a. __not_b :- c. __not_b :- b. __not_a :- not a. __p :- a & __not_a & not __p."
                 " __not_b :- not b. __p :- b & __not_b & not __p.");
  o.require(S(r.program) == S(p3), "pipeline text");
  o.require(classify(r.program) == ProgramClass::Disjunctive, "pipeline class");
  Sets restricted = restrictAll(answerSetsReduct(r.program), {"a", "b", "c"});
  o.require(restricted == Sets{{}, {"a"}}, "restriction");
  o.detail << (o.pass ? "" : "; ") << "FreeGen {x},{a}; pipeline " << r.program.size()
           << " clauses, restricts to {} and {a}";
}

void criterion4(Outcome& o, const std::vector<Program>& programs) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t bad = 0, nonempty = 0;
  for (const auto& p : programs) {
    Sets r = answerSetsReduct(p);
    if (r != answerSetsIntuitionistic(p) || r != oracle::answerSets(p)) ++bad;
    if (!r.empty()) ++nonempty;
  }
  auto s = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0).count();
  o.require(bad == 0, std::to_string(bad) + " disagreements");
  o.require(s <= 600, "runtime");
  o.detail << (o.pass ? "" : "; ") << programs.size() << " programs, " << bad << " disagreements, " << nonempty
           << " with answer sets, " << s << " s";
}

void criterion5(Outcome& o, const std::vector<Program>& programs) {
  std::size_t bad = 0, nonempty = 0;
  for (const auto& p : programs) {
    Sets route = minAnswerSetsIntuitionistic(p);
    Sets expected = oracle::intersect(answerSetsReduct(p), minimalModels(p));
    if (route != expected || route != oracle::minAnswerSets(p)) ++bad;
    if (!route.empty()) ++nonempty;
  }
  o.require(bad == 0, std::to_string(bad) + " disagreements");
  Program gap = P("a | not a. b :- a. b :- not b.");
  o.require(answerSetsReduct(gap) == Sets{{"a", "b"}}, "gap program answer set");
  o.require(minimalModels(gap) == Sets{{"b"}}, "gap program minimal model");
  o.require(minAnswerSets(gap).empty() && minAnswerSetsIntuitionistic(gap).empty(), "gap program min-answer sets");
  o.detail << (o.pass ? "" : "; ") << programs.size() << " programs, " << bad << " disagreements, " << nonempty
           << " with min-answer sets; gap program: {a,b} / {b} / none";
}

void criterion6(Outcome& o) {
  ProgramGenerator gen(4242);
  std::size_t pairs = 0, separatedEquivalent = 0, synthesized = 0, disagreementsSE = 0, g3Inequivalent = 0;
  for (int n = 0; n < 200; ++n) {
    std::size_t atoms = 1 + gen.below(3);
    Program p1 = gen.program({.atoms = atoms, .maxClauses = 3, .target = ProgramClass::Augmented});
    Program p2 = gen.chance(35) ? augToFree(p1).program.united(gen.chance(50) ? gen.program({.atoms = atoms, .maxClauses = 1}) : Program{})
                                : gen.program({.atoms = atoms, .maxClauses = 3, .target = ProgramClass::Augmented});
    ++pairs;
    bool g3 = g3Equivalent(p1, p2).equivalent;
    if (g3 != oracle::g3Equivalent(p1, p2)) ++disagreementsSE;
    if (!g3) ++g3Inequivalent;
    for (Semantics s : {Semantics::Answer, Semantics::MinAnswer}) {
      auto bounded = boundedStronglyEquivalent(p1, p2, s, 2);
      if (g3 && !bounded.holds) ++separatedEquivalent;
      auto decided = stronglyEquivalent(p1, p2, s);
      if (decided.holds != g3) ++disagreementsSE;
      if (!g3 && bounded.holds) {
        // no context at the bound: the synthesized witness must separate
        bool ok = decided.witness &&
                  resultsUnder(p1.united(decided.witness->context), s) != resultsUnder(p2.united(decided.witness->context), s);
        if (ok) ++synthesized;
        else ++disagreementsSE;
      }
    }
  }
  o.require(separatedEquivalent == 0, std::to_string(separatedEquivalent) + " G3-equivalent pairs separated");
  o.require(disagreementsSE == 0, std::to_string(disagreementsSE) + " verdict disagreements");
  o.require(g3Inequivalent > 0 && g3Inequivalent < pairs, "corpus mixes both verdicts");

  auto seq = stronglyEquivalent(P("a :- a."), P("a | not a."), Semantics::MinAnswer);
  o.require(seq.witness && S(seq.witness->context) == "a :- not a.\n" && seq.witness->left.empty() &&
                seq.witness->right == Sets{{"a"}},
            "loop vs middle witness");
  auto s31 = stronglyEquivalent(P("a :- not b."), P("a."), Semantics::Answer);
  o.require(s31.witness && S(s31.witness->context) == "b :- a.\n" && s31.witness->left.empty() &&
                s31.witness->right == Sets{{"a", "b"}},
            "defeasible vs fact witness");
  o.detail << (o.pass ? "" : "; ") << pairs << " pairs x 2 semantics, " << g3Inequivalent
           << " G3-inequivalent, " << separatedEquivalent << " G3-equivalent pairs separated, "
           << synthesized << " witnesses beyond the bound; witnesses {a :- not a.} and {b :- a.}";
}

void criterion7(Outcome& o) {
  ProgramGenerator gen(777);
  std::size_t inequivalent = 0, failures = 0, caseI = 0, caseII = 0;
  for (int n = 0; n < 200; ++n) {
    Program p1 = gen.program({.atoms = 1 + gen.below(3), .maxClauses = 3, .target = ProgramClass::Augmented});
    Program p2 = gen.program({.atoms = 1 + gen.below(3), .maxClauses = 3, .target = ProgramClass::Augmented});
    auto t = tWitness(p1, p2, Semantics::MinAnswer);
    if (!t) continue;
    ++inequivalent;
    const Program& modeled = t->modelsSide == 1 ? p1 : p2;
    const Program& other = t->modelsSide == 1 ? p2 : p1;
    Program m = modeled.united(t->context), x = other.united(t->context);
    bool mCons = consistentI(m.formulas()), xCons = consistentI(x.formulas());
    bool mComp = literalCompleteI(m.formulas(), m.signature()).complete;
    bool xComp = literalCompleteI(x.formulas(), x.signature()).complete;
    bool separates = oracle::minAnswerSets(p1.united(t->context)) != oracle::minAnswerSets(p2.united(t->context));
    bool matches = false;
    if (t->separation == SeparationCase::Inconsistent) {
      matches = mCons && mComp && !xCons;
      ++caseI;
    } else if (t->separation == SeparationCase::Incomplete) {
      matches = !(mCons && mComp) && xCons && xComp;
      ++caseII;
    }
    if (!(separates && t->separates && matches)) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " of " + std::to_string(inequivalent) + " witnesses");
  o.require(inequivalent >= 50, "too few inequivalent pairs");
  o.detail << (o.pass ? "" : "; ") << inequivalent << " inequivalent pairs, case (i) " << caseI << ", case (ii) "
           << caseII << ", " << failures << " failures";
}

void criterion8(Outcome& o) {
  auto em = provesI({}, F("a | not a"));
  o.require(!em.provable, "excluded middle provable");
  o.require(em.countermodel && em.countermodel->worlds.size() == 2 && oracle::wellFormed(*em.countermodel) &&
                !oracle::forces(*em.countermodel, 0, F("a | not a")),
            "countermodel");
  o.require(provesI({}, F("not not (a | not a)")).provable, "not not (a | not a)");
  std::vector<Formula> nnn{F("not not not a")}, n1{F("not a")}, a{F("a")}, nna{F("not not a")};
  o.require(equivalentI(nnn, n1), "not not not a == not a");
  o.require(!equivalentI(a, nna), "a != not not a");

  std::map<std::string, std::size_t> counts;
  ProgramGenerator gen(88);
  auto atoms = gen.atomNames(3);

  std::vector<std::pair<std::string, std::string>> eqs{
      {"not not not x", "not x"}, {"x & y", "y & x"}, {"x | y", "y | x"}, {"(x -> (y -> z))", "((x & y) -> z)"},
      {"not (x | y)", "not x & not y"}, {"(x -> y & z)", "(x -> y) & (x -> z)"}};
  for (int n = 0; n < 200; ++n) {
    auto [fs, gs] = eqs[gen.below(eqs.size())];
    Formula f = F(fs), g = F(gs);
    for (const char* v : {"x", "y", "z"}) {
      Formula sub = gen.anyFormula(atoms, 1);
      f = substitute(f, v, sub);
      g = substitute(g, v, sub);
    }
    std::vector<std::string> withHole = atoms;
    withHole.push_back("hole");
    Formula ctx = gen.anyFormula(withHole, 3);
    std::vector<Formula> t1{substitute(ctx, "hole", f)}, t2{substitute(ctx, "hole", g)};
    if (!equivalentI(t1, t2)) o.require(false, "replace");
    ++counts["replace"];
  }

  for (int n = 0; n < 2000 && counts["lang"] < 200; ++n) {
    std::vector<Formula> t1{gen.anyFormula({"a", "b"}, 2), gen.anyFormula({"a", "b"}, 2)};
    std::vector<Formula> both = t1;
    for (const char* x : {"c", "d"})
      if (gen.chance(70)) both.push_back(Formula::neg(Formula::atom(x)));
    Formula goal = gen.anyFormula({"a", "b"}, 2);
    if (!provesI(both, goal).provable) continue;
    if (!provesI(t1, goal).provable) o.require(false, "lang");
    ++counts["lang"];
  }

  for (int n = 0; n < 3000 && counts["nonegs"] < 200; ++n) {
    std::vector<Formula> gamma;
    for (std::size_t k = 1 + gen.below(3); k > 0; --k)
      gamma.push_back(gen.chance(50) ? positive(gen, atoms, 2) : twoNegated(gen, atoms, 2));
    Formula goal = positive(gen, atoms, 2);
    if (!provesI(gamma, goal).provable) continue;
    if (!provesI(positiveSubset(gamma), goal).provable) o.require(false, "nonegs");
    ++counts["nonegs"];
  }

  auto four = gen.atomNames(4);
  auto subset = [&] {
    AtomSet m;
    for (const auto& x : four)
      if (gen.chance(40)) m.insert(x);
    return m;
  };
  for (int n = 0; n < 2000 && counts["p-redu1"] < 200; ++n) {
    Program p = gen.program({.atoms = 4, .maxClauses = 4, .target = ProgramClass::General});
    AtomSet m = subset();
    auto lhs = plus(p.formulas(), negs(m));
    if (!consistentI(lhs)) continue;
    if (!equivalentI(lhs, plus(redu1(p, m).formulas(), negs(m)))) o.require(false, "p-redu1");
    ++counts["p-redu1"];
  }
  for (int n = 0; n < 200; ++n) {
    Program p = gen.program({.atoms = 4, .maxClauses = 4, .target = ProgramClass::General});
    AtomSet m = subset();
    auto nn = doubleNegatedAtoms(m);
    if (!equivalentI(plus(p.formulas(), nn), plus(redu2(p, m).formulas(), nn))) o.require(false, "p-redu2");
    ++counts["p-redu2"];
  }
  for (const auto& [name, c] : counts) o.require(c >= 200, name + " has only " + std::to_string(c) + " instances");
  o.detail << (o.pass ? "" : "; ") << "prover examples hold;";
  for (const auto& [name, c] : counts) o.detail << " " << name << "=" << c;
}

void criterion9(Outcome& o, const std::string& cli) {
  auto a = runCli(cli, "--format machine selftest --seed 7");
  auto b = runCli(cli, "--format machine selftest --seed 7");
  o.require(a.first == 0 && b.first == 0, "selftest exit status " + std::to_string(a.first));
  o.require(!a.second.empty() && a.second == b.second, "outputs differ");
  o.detail << (o.pass ? "" : "; ") << a.second.size() << " bytes, identical";
}
}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to nestedasp>\n";
    return 2;
  }
  std::string cli = argv[1];
  auto programs = corpus();
  std::vector<std::function<void(Outcome&)>> criteria{
      criterion1,
      criterion2,
      criterion3,
      [&](Outcome& o) { criterion4(o, programs); },
      [&](Outcome& o) { criterion5(o, programs); },
      criterion6,
      criterion7,
      criterion8,
      [&](Outcome& o) { criterion9(o, cli); },
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str() << "\n"
              << std::flush;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
