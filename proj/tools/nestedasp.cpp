// Command-line front end for the nestedasp library.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nestedasp/equivalence.hpp"
#include "nestedasp/errors.hpp"
#include "nestedasp/multivalued.hpp"
#include "nestedasp/parser.hpp"
#include "nestedasp/prover.hpp"
#include "nestedasp/report.hpp"
#include "nestedasp/selftest.hpp"
#include "nestedasp/semantics.hpp"
#include "nestedasp/transforms.hpp"

namespace {

using namespace nasp;

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kCap = 3, kInternal = 4 };

struct Config {
  std::string format = "human";
  bool checked = false;
  bool arbitrary = false;
  std::size_t budget = Options{}.proverBudget;
  std::size_t maxAtoms = Options{}.maxAtomsClassical;
  std::size_t maxAtomsG3 = Options{}.maxAtomsG3;

  Options options() const {
    Options o;
    o.checked = checked;
    o.proverBudget = budget;
    o.maxAtomsClassical = maxAtoms;
    o.maxAtomsG3 = maxAtomsG3;
    return o;
  }
  Format fmt() const { return format == "machine" ? Format::Machine : Format::Human; }
};

// Source text of a file, or stdin for "-".
std::string readSource(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Loader {
  const Config& config;
  std::string current;

  Program load(const std::string& path, bool internal = false) {
    current = path;
    Program p = parseProgram(readSource(path), {.arbitrary = config.arbitrary, .allowReserved = internal});
    current.clear();
    return p;
  }
  Formula formula(const std::string& text) {
    current = "<goal>";
    Formula f = parseFormula(text, {.arbitrary = true});
    current.clear();
    return f;
  }
};

SemanticsKind semanticsKind(const std::string& s) {
  if (s == "min-answer") return SemanticsKind::MinAnswer;
  if (s == "minimal-model") return SemanticsKind::MinimalModel;
  if (s == "minimal-answer") return SemanticsKind::MinimalAnswer;
  return SemanticsKind::Answer;
}

Method method(const std::string& s) {
  if (s == "intuitionistic") return Method::Intuitionistic;
  if (s == "both") return Method::Both;
  return Method::Reduct;
}

AtomSet parseAtomList(const std::string& text) {
  AtomSet out;
  std::string token;
  for (char c : text + " ") {
    if (c == ' ' || c == ',' || c == '{' || c == '}') {
      if (!token.empty()) out.insert(token);
      token.clear();
    } else {
      token += c;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Answer sets, intuitionistic characterizations, transformations and strong equivalence for "
               "propositional programs with nested expressions"};
  app.require_subcommand(1);
  app.fallthrough();
  Config config;
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--checked", config.checked, "Compute every result by two routes and compare");
  app.add_flag("--arbitrary", config.arbitrary, "Accept embedded implications (F -> G)");
  app.add_option("--budget", config.budget, "Sequents the prover may expand per query")
      ->envname("NESTEDASP_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-atoms", config.maxAtoms, "Largest signature enumerated classically")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-atoms-g3", config.maxAtomsG3, "Largest signature enumerated in G3")
      ->check(CLI::PositiveNumber);

  std::string file, file2, methodName = "reduct", semanticsName = "answer", target = "disjunctive", goal, theoryFile,
                           logic = "int", candidate, interpretation, equivSemantics = "answer";
  bool trace = false;
  std::size_t bound = 2;
  std::uint64_t seed = 7;

  auto* solveCmd = app.add_subcommand("solve", "Answer sets and related semantics");
  solveCmd->add_option("program", file, "Program file, - for stdin")->required();
  solveCmd->add_option("--method", methodName)->check(CLI::IsMember({"reduct", "intuitionistic", "both"}));
  solveCmd->add_option("--semantics", semanticsName)
      ->check(CLI::IsMember({"answer", "min-answer", "minimal-model", "minimal-answer"}));
  solveCmd->add_option("--candidate", candidate, "Analyze one candidate set instead, e.g. \"a b\"");

  auto* minModels = app.add_subcommand("min-models", "Minimal classical models");
  minModels->add_option("program", file)->required();

  auto* transform = app.add_subcommand("transform", "Rewrite an augmented program");
  transform->add_option("program", file)->required();
  transform->add_option("--to", target)->check(CLI::IsMember({"free", "general", "disjunctive"}));
  transform->add_flag("--trace", trace, "Show every stage");

  auto* prove = app.add_subcommand("prove", "Decide theory |- goal");
  prove->add_option("--goal", goal)->required();
  prove->add_option("--theory", theoryFile, "Theory in program syntax");
  prove->add_option("--logic", logic)->check(CLI::IsMember({"int", "g3", "classical"}));

  auto twoPrograms = [&](CLI::App* sub) {
    sub->add_option("p1", file)->required();
    sub->add_option("p2", file2)->required();
  };
  auto* equiv = app.add_subcommand("equiv", "Same answer sets");
  twoPrograms(equiv);
  equiv->add_option("--semantics", equivSemantics)->check(CLI::IsMember({"answer", "min-answer"}));
  auto* strong = app.add_subcommand("strong-equiv", "Equivalence under every context (decided in G3)");
  twoPrograms(strong);
  strong->add_option("--semantics", equivSemantics)->check(CLI::IsMember({"answer", "min-answer"}));
  auto* consExt = app.add_subcommand("cons-ext", "p2 is a conservative extension of p1");
  twoPrograms(consExt);
  auto* strongConsExt = app.add_subcommand("strong-cons-ext", "Bounded check of strong conservative extension");
  twoPrograms(strongConsExt);
  strongConsExt->add_option("--bound", bound, "Context clauses")->check(CLI::NonNegativeNumber);

  auto* pipeline = app.add_subcommand("pipeline-check", "Pipeline output restricts to the input's answer sets");
  pipeline->add_option("program", file)->required();

  auto* witness = app.add_subcommand("witness", "Context program T(I) of a 3-valued interpretation");
  witness->add_option("interpretation", interpretation, "e.g. \"a=1 b=2\"")->required();

  auto* selftest = app.add_subcommand("selftest", "Golden examples and seeded random checks");
  selftest->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Options options = config.options();
  Format fmt = config.fmt();
  Loader loader{config, {}};
  try {
    if (*solveCmd) {
      Program p = loader.load(file);
      if (solveCmd->count("--candidate")) {
        auto report = analyze(p, parseAtomList(candidate), method(methodName), options);
        std::cout << emitReport(p, {report}, fmt);
        return report.isAnswerSet ? kOk : kNo;
      }
      AtomSets result = nasp::solve(p, semanticsKind(semanticsName), method(methodName), options);
      std::cout << emitAnswerSets(p, result, semanticsName, methodName, fmt);
      return kOk;
    }
    if (*minModels) {
      Program p = loader.load(file);
      std::cout << emitAnswerSets(p, minimalModels(p, options), "minimal-model", "enumeration", fmt);
      return kOk;
    }
    if (*transform) {
      Program p = loader.load(file);
      TransformResult r = augToFree(p, options);
      if (target != "free") {
        TransformResult g = freeToGen(r.program, r.registry, options);
        g.trace.insert(g.trace.begin(), r.trace.begin(), r.trace.end());
        r = std::move(g);
      }
      if (target == "disjunctive") {
        TransformResult d = genToDisj(r.program, r.registry, options);
        d.trace.insert(d.trace.begin(), r.trace.begin(), r.trace.end());
        r = std::move(d);
      }
      std::cout << emitTransform(p, r, trace, fmt);
      return kOk;
    }
    if (*prove) {
      Program theory = theoryFile.empty() ? Program{} : loader.load(theoryFile);
      Formula g = loader.formula(goal);
      auto formulas = theory.formulas();
      ProofJudgment j;
      if (logic == "int") {
        j = provesI(formulas, g, options);
      } else {
        j.theory = formulas;
        j.goal = g;
        j.provable = entailsGi(formulas, g, logic == "g3" ? 3 : 2, options);
      }
      std::cout << emitJudgment(theory, j, logic, fmt);
      return j.provable ? kOk : kNo;
    }
    auto verdictCommand = [&](auto&& compute, bool internalSecond) {
      Program p1 = loader.load(file);
      Program p2 = loader.load(file2, internalSecond);
      EquivalenceVerdict v = compute(p1, p2);
      std::cout << emitVerdict(p1, p2, v, fmt);
      return v.holds ? kOk : kNo;
    };
    Semantics sem = equivSemantics == "min-answer" ? Semantics::MinAnswer : Semantics::Answer;
    if (*equiv)
      return verdictCommand([&](const Program& a, const Program& b) { return equivalent(a, b, sem, options); }, false);
    if (*strong)
      return verdictCommand(
          [&](const Program& a, const Program& b) { return stronglyEquivalent(a, b, sem, options); }, false);
    if (*consExt)
      return verdictCommand(
          [&](const Program& a, const Program& b) { return conservativeExtension(a, b, options); }, true);
    if (*strongConsExt)
      return verdictCommand(
          [&](const Program& a, const Program& b) { return strongConservativeExtension(a, b, bound, options); },
          true);
    if (*pipeline) {
      Program p = loader.load(file);
      Options fast = options;
      fast.checked = false;
      PipelineCheck c = pipelineRestriction(p, fast);
      std::cout << emitPipeline(p, c, fmt);
      return c.holds ? kOk : kNo;
    }
    if (*witness) {
      Interpretation i = parseInterpretation(interpretation, 3);
      std::cout << emitWitness(i, witnessProgram(i), fmt);
      return kOk;
    }
    if (*selftest) {
      auto cases = runSelftest(seed, options);
      std::cout << emitSelftest(seed, cases, fmt);
      bool all = std::all_of(cases.begin(), cases.end(), [](const SelftestCase& c) { return c.pass; });
      return all ? kOk : kNo;
    }
  } catch (const SyntaxError& e) {
    std::cerr << (loader.current.empty() ? "" : loader.current + ":") << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
