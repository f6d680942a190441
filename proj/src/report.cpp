#include "nestedasp/report.hpp"

#include <sstream>

#include "json.hpp"
#include "nestedasp/parser.hpp"

namespace nasp {

using Json = nlohmann::ordered_json;

std::string atomSetText(const AtomSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : set) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  return out + "}";
}

namespace {

Json atomsJson(const AtomSet& set) {
  Json j = Json::array();
  for (const auto& a : set) j.push_back(a);
  return j;
}

Json setsJson(const AtomSets& sets) {
  Json j = Json::array();
  for (const auto& s : sets) j.push_back(atomsJson(s));
  return j;
}

Json header(std::string_view command, const Json& cls, const AtomSet& sigma) {
  Json j;
  j["version"] = std::string(kVersion);
  j["command"] = std::string(command);
  j["class"] = cls;
  j["signature"] = atomsJson(sigma);
  return j;
}

std::string_view commandOf(Relation r) {
  switch (r) {
    case Relation::Equivalent: return "equiv";
    case Relation::StronglyEquivalent: return "strong-equiv";
    case Relation::ConservativeExtension: return "cons-ext";
    case Relation::StrongConservativeExtension: return "strong-cons-ext";
  }
  return "equiv";
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

std::string classOf(const Program& p) { return std::string(toString(classify(p))); }

AtomSet unionSignature(const Program& a, const Program& b) {
  AtomSet s = a.signature();
  for (const auto& x : b.signature()) s.insert(x);
  return s;
}

std::string indent(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) out += prefix + line + "\n";
  return out;
}

Json mappingJson(const std::vector<std::pair<AtomSet, AtomSet>>& mapping) {
  Json j = Json::array();
  for (const auto& [from, to] : mapping) j.push_back(Json{{"from", atomsJson(from)}, {"to", atomsJson(to)}});
  return j;
}

Json countermodelJson(const KripkeModel& m) {
  Json worlds = Json::array();
  for (const auto& w : m.worlds) {
    Json succ = Json::array();
    for (auto s : w.successors) succ.push_back(s);
    worlds.push_back(Json{{"atoms", atomsJson(w.atoms)}, {"successors", succ}});
  }
  return worlds;
}

}  // namespace

std::string emitAnswerSets(const Program& program, const AtomSets& sets, std::string_view semantics,
                           std::string_view method, Format format) {
  if (format == Format::Machine) {
    Json j = header("solve", classOf(program), program.signature());
    j["semantics"] = std::string(semantics);
    j["method"] = std::string(method);
    j["results"] = setsJson(sets);
    return finish(j);
  }
  std::ostringstream out;
  out << "class:     " << classOf(program) << "\n";
  out << "signature: " << atomSetText(program.signature()) << "\n";
  out << semantics << " (" << method << "): " << sets.size() << "\n";
  for (std::size_t i = 0; i < sets.size(); ++i) out << "  " << (i + 1) << "  " << atomSetText(sets[i]) << "\n";
  return out.str();
}

std::string emitReport(const Program& program, const std::vector<AnswerSetReport>& reports, Format format) {
  if (format == Format::Machine) {
    Json j = header("analyze", classOf(program), program.signature());
    Json results = Json::array();
    for (const auto& r : reports) {
      Json e;
      e["candidate"] = atomsJson(r.candidate);
      e["method"] = std::string(toString(r.method));
      e["answer_set"] = r.isAnswerSet;
      e["minimal_model"] = r.isMinimalModel;
      e["min_answer_set"] = r.isMinAnswerSet;
      if (r.reduct) e["reduct"] = printProgram(*r.reduct);
      results.push_back(e);
    }
    j["results"] = results;
    return finish(j);
  }
  std::ostringstream out;
  out << "candidate            answer  minimal  min-answer\n";
  for (const auto& r : reports) {
    std::string c = atomSetText(r.candidate);
    c.resize(std::max<std::size_t>(c.size(), 20), ' ');
    out << c << " " << (r.isAnswerSet ? "yes   " : "no    ") << "  " << (r.isMinimalModel ? "yes    " : "no     ")
        << "  " << (r.isMinAnswerSet ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string emitVerdict(const Program& p1, const Program& p2, const EquivalenceVerdict& v, Format format) {
  if (format == Format::Machine) {
    Json j = header(commandOf(v.relation), Json::array({classOf(p1), classOf(p2)}), unionSignature(p1, p2));
    Json r;
    r["verdict"] = verdictName(v);
    r["holds"] = v.holds;
    if (v.relation == Relation::Equivalent || v.relation == Relation::StronglyEquivalent)
      r["semantics"] = std::string(toString(v.semantics));
    r["bounded"] = v.bounded;
    if (v.bounded) {
      r["bound"] = v.bound;
      r["contexts_checked"] = v.contextsChecked;
    }
    if (!v.mapping.empty()) r["mapping"] = mappingJson(v.mapping);
    if (v.witness) {
      const Witness& w = *v.witness;
      Json wj;
      wj["origin"] = w.origin;
      wj["context"] = printProgram(w.context);
      wj["left"] = setsJson(w.left);
      wj["right"] = setsJson(w.right);
      if (w.interpretation) wj["interpretation"] = toString(*w.interpretation);
      if (w.separation != SeparationCase::None) wj["case"] = std::string(toString(w.separation));
      r["witness"] = wj;
    }
    j["results"] = r;
    return finish(j);
  }
  std::ostringstream out;
  out << verdictName(v);
  if (v.relation == Relation::Equivalent || v.relation == Relation::StronglyEquivalent)
    out << " (" << toString(v.semantics) << " semantics)";
  out << "\n";
  if (v.bounded)
    out << "bounded check: " << v.contextsChecked << " contexts of at most " << v.bound
        << " clauses; not a proof\n";
  if (!v.mapping.empty()) {
    out << "restriction:\n";
    for (const auto& [from, to] : v.mapping) out << "  " << atomSetText(from) << " -> " << atomSetText(to) << "\n";
  }
  if (v.witness) {
    const Witness& w = *v.witness;
    out << "witness context (" << w.origin << "):\n";
    std::string text = printProgram(w.context);
    out << (text.empty() ? "  (empty)\n" : indent(text, "  "));
    if (w.interpretation) out << "from interpretation: " << toString(*w.interpretation) << "\n";
    if (w.separation != SeparationCase::None) out << "case " << toString(w.separation) << "\n";
    auto list = [&](const AtomSets& s) {
      std::string t = "[";
      for (std::size_t i = 0; i < s.size(); ++i) t += (i ? ", " : "") + atomSetText(s[i]);
      return t + "]";
    };
    out << "left:  " << list(w.left) << "\n";
    out << "right: " << list(w.right) << "\n";
  }
  return out.str();
}

std::string emitTransform(const Program& input, const TransformResult& result, bool trace, Format format) {
  if (format == Format::Machine) {
    Json j = header("transform", classOf(result.program), result.program.signature());
    Json r;
    r["input_class"] = classOf(input);
    r["program"] = printProgram(result.program);
    Json fresh = Json::object();
    for (const auto& [atom, repl] : result.registry.replacements()) fresh[repl] = "not " + atom;
    if (result.registry.issuedConstraintAtom()) fresh[*result.registry.issuedConstraintAtom()] = "constraint";
    r["fresh"] = fresh;
    if (trace) {
      Json stages = Json::array();
      for (const auto& s : result.trace)
        stages.push_back(Json{{"stage", s.name}, {"input", printProgram(s.input)}, {"output", printProgram(s.output)}});
      r["trace"] = stages;
    }
    j["results"] = r;
    return finish(j);
  }
  std::ostringstream out;
  if (trace) {
    for (const auto& s : result.trace) {
      out << "== " << s.name << " (" << classOf(s.output) << ")\n" << printProgram(s.output);
    }
    return out.str();
  }
  out << printProgram(result.program);
  return out.str();
}

std::string emitPipeline(const Program& input, const PipelineCheck& c, Format format) {
  if (format == Format::Machine) {
    Json j = header("pipeline-check", classOf(input), input.signature());
    Json r;
    r["holds"] = c.holds;
    r["output"] = printProgram(c.transform.program);
    r["answer_sets"] = setsJson(c.answerSets);
    r["output_min_answer_sets"] = setsJson(c.outputResults);
    r["mapping"] = mappingJson(c.mapping);
    r["restricted"] = setsJson(c.restricted);
    j["results"] = r;
    return finish(j);
  }
  std::ostringstream out;
  out << (c.holds ? "restriction matches" : "restriction MISMATCH") << "\n";
  out << "output program:\n" << indent(printProgram(c.transform.program), "  ");
  out << "min-answer sets of the output, restricted:\n";
  for (const auto& [from, to] : c.mapping) out << "  " << atomSetText(from) << " -> " << atomSetText(to) << "\n";
  out << "answer sets of the input:\n";
  for (const auto& s : c.answerSets) out << "  " << atomSetText(s) << "\n";
  return out.str();
}

std::string emitJudgment(const Program& theory, const ProofJudgment& judgment, std::string_view logic,
                         Format format) {
  AtomSet sigma = theory.signature();
  judgment.goal.collectAtoms(sigma);
  if (format == Format::Machine) {
    Json j = header("prove", classOf(theory), sigma);
    Json r;
    r["logic"] = std::string(logic);
    r["goal"] = printFormula(judgment.goal);
    r["provable"] = judgment.provable;
    if (judgment.derivation) r["derivation"] = toString(*judgment.derivation);
    if (judgment.countermodel) r["countermodel"] = countermodelJson(*judgment.countermodel);
    j["results"] = r;
    return finish(j);
  }
  std::ostringstream out;
  out << (judgment.provable ? "provable" : "not provable") << " in " << logic << ": " << printFormula(judgment.goal)
      << "\n";
  if (judgment.derivation) out << toString(*judgment.derivation);
  if (judgment.countermodel) out << "countermodel:\n" << indent(toString(*judgment.countermodel), "  ");
  return out.str();
}

std::string emitWitness(const Interpretation& interp, const Program& witness, Format format) {
  if (format == Format::Machine) {
    Json j = header("witness", classOf(witness), interp.signature());
    Json r;
    r["interpretation"] = toString(interp);
    r["definite"] = interp.isDefinite();
    r["program"] = printProgram(witness);
    j["results"] = r;
    return finish(j);
  }
  return printProgram(witness);
}

std::string emitSelftest(std::uint64_t seed, const std::vector<SelftestCase>& cases, Format format) {
  std::size_t passed = 0;
  for (const auto& c : cases) passed += c.pass ? 1 : 0;
  if (format == Format::Machine) {
    Json j = header("selftest", "", {});
    j["seed"] = seed;
    Json r = Json::array();
    for (const auto& c : cases) r.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["results"] = r;
    j["passed"] = passed;
    j["total"] = cases.size();
    return finish(j);
  }
  std::ostringstream out;
  for (const auto& c : cases) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << passed << "/" << cases.size() << " passed (seed " << seed << ")\n";
  return out.str();
}

}  // namespace nasp
