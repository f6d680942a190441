#include "nestedasp/selftest.hpp"

#include <functional>

#include "nestedasp/equivalence.hpp"
#include "nestedasp/generators.hpp"
#include "nestedasp/parser.hpp"
#include "nestedasp/prover.hpp"
#include "nestedasp/transforms.hpp"

namespace nasp {

namespace {

Program P(std::string_view text) { return parseProgram(text, {.arbitrary = true, .allowReserved = true}); }

std::string listText(const AtomSets& sets) {
  std::string t = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) t += (i ? ", " : "") + atomSetText(sets[i]);
  return t + "]";
}

AtomSets sets(std::initializer_list<AtomSet> items) { return AtomSets(items); }

struct Runner {
  std::vector<SelftestCase> cases;

  void check(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    SelftestCase c;
    c.name = std::move(name);
    try {
      auto [ok, detail] = body();
      c.pass = ok;
      while (!detail.empty() && detail.back() == '\n') detail.pop_back();
      for (auto& ch : detail)
        if (ch == '\n') ch = ' ';
      c.detail = std::move(detail);
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("error: ") + e.what();
    }
    cases.push_back(std::move(c));
  }

  void expectSets(std::string name, const std::function<AtomSets()>& compute, const AtomSets& expected) {
    check(std::move(name), [&] {
      AtomSets got = compute();
      return std::pair{got == expected, listText(got)};
    });
  }

  void expectProgram(std::string name, const std::function<Program()>& compute, std::string_view expected) {
    check(std::move(name), [&] {
      std::string got = printProgram(compute());
      return std::pair{got == printProgram(P(expected)), got};
    });
  }
};

}  // namespace

std::vector<SelftestCase> runSelftest(std::uint64_t seed, const Options& base) {
  Options opt = base;
  opt.checked = true;
  Runner r;
  const Program nested = P("a :- not not a.  not b :- c | b.");

  r.expectSets("nested program answer sets (reduct)", [&] { return answerSetsReduct(nested, opt); }, sets({{}, {"a"}}));
  r.expectSets("nested program answer sets (intuitionistic)", [&] { return answerSetsIntuitionistic(nested, opt); },
               sets({{}, {"a"}}));
  r.expectProgram("nested program reduct at {a}", [&] { return reduct(nested, {"a"}); }, "a :- top.  top :- c | b.");
  r.expectSets("excluded middle answer sets", [&] { return answerSets(P("a | not a."), opt); }, sets({{}, {"a"}}));
  r.expectSets("union with b :- a has no answer sets", [&] { return answerSets(P("a :- not b. b :- a."), opt); },
               sets({}));

  const Program gap = P("a | not a.  b :- a.  b :- not b.");
  r.expectSets("gap program minimal models", [&] { return minimalModels(gap, opt); }, sets({{"b"}}));
  r.expectSets("gap program answer sets", [&] { return answerSets(gap, opt); }, sets({{"a", "b"}}));
  r.expectSets("gap program min-answer sets", [&] { return minAnswerSets(gap, opt); }, sets({}));
  r.expectSets("gap program minimal answer sets", [&] { return minimalAnswerSets(gap, opt); }, sets({{"a", "b"}}));
  r.expectSets("loop vs middle min-answer a :- a", [&] { return minAnswerSets(P("a :- a."), opt); }, sets({{}}));
  r.expectSets("loop vs middle min-answer a | not a", [&] { return minAnswerSets(P("a | not a."), opt); }, sets({{}}));
  r.expectSets("loop vs middle min-answer with a :- not a", [&] { return minAnswerSets(P("a | not a. a :- not a."), opt); },
               sets({{"a"}}));

  r.check("classify disjunctive row", [&] {
    auto c = classify(P("a | b :- c & d & not e."));
    return std::pair{c == ProgramClass::Disjunctive, std::string(toString(c))};
  });
  r.check("classify constraint row", [&] {
    auto c = classify(P(":- p & q."));
    return std::pair{c == ProgramClass::General, std::string(toString(c))};
  });

  r.expectProgram("AugFree nested head and body",
                  [&] { return augToFree(P("not (a & not b) & c :- d & (e | not f)."), opt).program; },
                  "not a :- not b & d & e.  not a :- not b & d & not f.  c :- d & e.  c :- d & not f.");
  r.check("AugFree nested head and body is G3-equivalent", [&] {
    Program in = P("not (a & not b) & c :- d & (e | not f).");
    bool eq = g3Equivalent(in, augToFree(in, opt).program, opt).equivalent;
    return std::pair{eq, std::string()};
  });
  r.expectProgram("AugFree of nested program", [&] { return augToFree(nested, opt).program; },
                  "a | not a.  not b :- c.  not b :- b.");
  r.expectProgram("FreeGen of excluded middle", [&] { return freeToGen(P("a | not a."), {}, opt).program; },
                  "a | __not_a.  __not_a :- not a.  :- a & __not_a.");
  r.expectSets("FreeGen of excluded middle answer sets",
               [&] { return answerSets(freeToGen(P("a | not a."), {}, opt).program, opt); },
               sets({{"__not_a"}, {"a"}}));
  r.expectProgram("pipeline on nested program", [&] { return augToDisjPipeline(nested, opt).program; },
                  "a | __not_a.  __not_b :- c.  __not_b :- b.  __not_a :- not a.  __p :- a & __not_a & not __p."
                  "  __not_b :- not b.  __p :- b & __not_b & not __p.");
  r.expectSets("pipeline on nested program restricts", [&] { return pipelineRestriction(nested, opt).restricted; },
               sets({{}, {"a"}}));

  r.check("equivalent under answer sets", [&] {
    auto v = equivalent(P("a :- not b."), P("a."), Semantics::Answer, opt);
    return std::pair{v.holds, verdictName(v)};
  });
  r.check("strong equivalence witness b :- a", [&] {
    auto v = stronglyEquivalent(P("a :- not b."), P("a."), Semantics::Answer, opt);
    std::string w = v.witness ? printProgram(v.witness->context) : "";
    return std::pair{!v.holds && w == "b :- a.\n" && v.witness->left == sets({}) &&
                         v.witness->right == sets({{"a", "b"}}),
                     w};
  });
  r.check("loop and middle equivalent under min-answer sets", [&] {
    auto v = equivalent(P("a :- a."), P("a | not a."), Semantics::MinAnswer, opt);
    return std::pair{v.holds, verdictName(v)};
  });
  r.check("loop and middle not equivalent under answer sets", [&] {
    auto v = equivalent(P("a :- a."), P("a | not a."), Semantics::Answer, opt);
    return std::pair{!v.holds, verdictName(v)};
  });
  r.check("loop vs middle strong min-answer witness a :- not a", [&] {
    auto v = stronglyEquivalent(P("a :- a."), P("a | not a."), Semantics::MinAnswer, opt);
    std::string w = v.witness ? printProgram(v.witness->context) : "";
    return std::pair{!v.holds && w == "a :- not a.\n" && v.witness->left == sets({}) &&
                         v.witness->right == sets({{"a"}}),
                     w};
  });
  r.check("one-sided interpretation of loop and middle", [&] {
    Interpretation i(3, {{"a", 1}});
    bool ok = modelsGi(P("a :- a."), i) && !modelsGi(P("a | not a."), i);
    return std::pair{ok, toString(i)};
  });
  r.check("conservative extension of excluded middle", [&] {
    Program small = P("a | not a.");
    auto v = conservativeExtension(small, freeToGen(small, {}, opt).program, opt);
    return std::pair{v.holds, verdictName(v)};
  });

  r.check("prover: a | not a is not provable", [&] {
    auto j = provesI({}, parseFormula("a | not a"), opt);
    bool ok = !j.provable && j.countermodel && j.countermodel->worlds.size() == 2 &&
              j.countermodel->refutes({}, parseFormula("a | not a"));
    return std::pair{ok, j.countermodel ? toString(*j.countermodel) : std::string()};
  });
  r.check("prover: not not (a | not a)", [&] {
    return std::pair{provesI({}, parseFormula("not not (a | not a)"), opt).provable, std::string()};
  });
  r.check("prover: triple negation", [&] {
    std::vector<Formula> t1{parseFormula("not not not a")}, t2{parseFormula("not a")};
    return std::pair{equivalentI(t1, t2, opt), std::string()};
  });
  r.check("prover: a vs not not a", [&] {
    std::vector<Formula> t1{parseFormula("a")}, t2{parseFormula("not not a")};
    return std::pair{!equivalentI(t1, t2, opt), std::string()};
  });

  ProgramGenerator gen(seed);
  for (int i = 0; i < 12; ++i) {
    Program p = gen.program({.atoms = 3, .maxClauses = 4, .maxDepth = 2, .target = ProgramClass::Augmented});
    std::string text = printProgram(p);
    for (auto& ch : text)
      if (ch == '\n') ch = ' ';
    r.check("random " + std::to_string(i) + ": " + text, [&] {
      AtomSets a = answerSetsReduct(p, opt);
      AtomSets b = answerSetsIntuitionistic(p, opt);
      AtomSets m = minAnswerSets(p, opt);
      return std::pair{a == b, listText(a) + " min " + listText(m)};
    });
  }
  return r.cases;
}

}  // namespace nasp
