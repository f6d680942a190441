#include "nestedasp/equivalence.hpp"

#include <algorithm>

#include "nestedasp/errors.hpp"
#include "nestedasp/parser.hpp"
#include "nestedasp/prover.hpp"

namespace nasp {

std::string_view toString(Relation r) {
  switch (r) {
    case Relation::Equivalent: return "equivalent";
    case Relation::StronglyEquivalent: return "strongly-equivalent";
    case Relation::ConservativeExtension: return "conservative-extension";
    case Relation::StrongConservativeExtension: return "strong-conservative-extension";
  }
  return "equivalent";
}

std::string_view toString(Semantics s) { return s == Semantics::Answer ? "answer" : "min-answer"; }

std::string_view toString(SeparationCase c) {
  switch (c) {
    case SeparationCase::None: return "none";
    case SeparationCase::Inconsistent: return "(i) consistent and complete vs inconsistent";
    case SeparationCase::Incomplete: return "(ii) incomplete and cannot be completed vs consistent and complete";
  }
  return "none";
}

std::string verdictName(const EquivalenceVerdict& v) {
  std::string name(toString(v.relation));
  return v.holds ? name : "not-" + name;
}

AtomSets resultsUnder(const Program& program, Semantics semantics, const Options& options) {
  return semantics == Semantics::Answer ? answerSets(program, options) : minAnswerSets(program, options);
}

namespace {

Program contextOf(std::vector<Clause> clauses) {
  bool reserved = false;
  for (const auto& c : clauses) {
    for (const auto& a : c.formula().atoms()) reserved = reserved || isReservedAtomName(a);
  }
  return Program(std::move(clauses), std::nullopt, reserved ? Origin::Internal : Origin::User);
}

AtomSet userAtomsOf(const AtomSet& atoms) {
  AtomSet out;
  for (const auto& a : atoms)
    if (!isReservedAtomName(a)) out.insert(a);
  return out;
}

Formula atomF(const std::string& a) { return Formula::atom(a); }

// Tries one context; fills the witness when it separates.
bool separates(const Program& p1, const Program& p2, const Program& context, Semantics semantics,
               const Options& options, Witness& out) {
  AtomSets left = resultsUnder(p1.united(context), semantics, options);
  AtomSets right = resultsUnder(p2.united(context), semantics, options);
  if (left == right) return false;
  out.context = context;
  out.left = std::move(left);
  out.right = std::move(right);
  return true;
}

std::vector<Clause> templateClauses(const AtomSet& pool) {
  std::vector<Clause> out;
  for (const auto& a : pool)
    for (const auto& b : pool)
      if (a != b) out.push_back({atomF(b), atomF(a)});
  for (const auto& a : pool) out.push_back({atomF(a), Formula::neg(atomF(a))});
  for (const auto& a : pool) out.push_back(Clause::fact(atomF(a)));
  for (const auto& a : pool)
    for (const auto& b : pool)
      if (a != b) out.push_back({atomF(a), Formula::neg(atomF(b))});
  for (const auto& a : pool)
    for (const auto& b : pool)
      if (a < b) out.push_back(Clause::fact(Formula::disj(atomF(a), atomF(b))));
  for (const auto& a : pool) out.push_back(Clause::constraint(atomF(a)));
  return out;
}

bool cannotBeCompleted(IntuitionisticProver& prover, const std::vector<Formula>& theory, const AtomSet& sigma) {
  std::vector<std::string> atoms(sigma.begin(), sigma.end());
  const std::size_t n = atoms.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Formula> t = theory;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) t.push_back(Formula::neg(atomF(atoms[i])));
    if (prover.consistent(t) && prover.literalComplete(t, sigma).complete) return false;
  }
  return true;
}

}  // namespace

EquivalenceVerdict equivalent(const Program& p1, const Program& p2, Semantics semantics, const Options& options) {
  EquivalenceVerdict v;
  v.relation = Relation::Equivalent;
  v.semantics = semantics;
  Witness w;
  w.origin = "empty";
  v.holds = !separates(p1, p2, Program{}, semantics, options, w);
  if (!v.holds) v.witness = std::move(w);
  return v;
}

SeparationCase separationCase(const Program& modeled, const Program& other, const Program& context,
                              const Options& options) {
  Program a = modeled.united(context);
  Program b = other.united(context);
  AtomSet sigma = a.signature();
  for (const auto& x : b.signature()) sigma.insert(x);
  if (sigma.size() > options.maxAtomsG3)
    throw ResourceLimitError("separation check over " + std::to_string(sigma.size()) + " atoms exceeds the cap");
  IntuitionisticProver prover(options.proverBudget);
  auto ta = a.formulas();
  auto tb = b.formulas();
  bool consA = prover.consistent(ta);
  bool compA = prover.literalComplete(ta, sigma).complete;
  bool consB = prover.consistent(tb);
  bool compB = prover.literalComplete(tb, sigma).complete;
  if (consA && compA && !consB) return SeparationCase::Inconsistent;
  if (!compA && consB && compB && cannotBeCompleted(prover, ta, sigma)) return SeparationCase::Incomplete;
  return SeparationCase::None;
}

std::optional<TWitness> tWitness(const Program& p1, const Program& p2, Semantics semantics, const Options& options) {
  auto diffs = g3Differences(p1, p2, options);
  if (diffs.empty()) return std::nullopt;
  auto chosen = std::find_if(diffs.begin(), diffs.end(),
                             [](const SidedInterpretation& d) { return d.interpretation.isDefinite(); });
  if (chosen == diffs.end()) chosen = diffs.begin();
  TWitness t;
  t.interpretation = chosen->interpretation;
  t.modelsSide = chosen->models;
  t.context = witnessProgram(t.interpretation);
  t.left = resultsUnder(p1.united(t.context), semantics, options);
  t.right = resultsUnder(p2.united(t.context), semantics, options);
  t.separates = t.left != t.right;
  const Program& modeled = t.modelsSide == 1 ? p1 : p2;
  const Program& other = t.modelsSide == 1 ? p2 : p1;
  t.separation = separationCase(modeled, other, t.context, options);
  return t;
}

EquivalenceVerdict stronglyEquivalent(const Program& p1, const Program& p2, Semantics semantics,
                                      const Options& options) {
  EquivalenceVerdict v;
  v.relation = Relation::StronglyEquivalent;
  v.semantics = semantics;
  G3Verdict g3 = g3Equivalent(p1, p2, options);
  if (g3.equivalent) return v;
  v.holds = false;

  Witness w;
  w.origin = "empty";
  if (separates(p1, p2, Program{}, semantics, options, w)) {
    v.witness = std::move(w);
    return v;
  }

  AtomSet sigma = p1.signature();
  for (const auto& a : p2.signature()) sigma.insert(a);
  w.origin = "shape";
  for (const auto& a : sigma)
    for (const auto& b : sigma)
      if (a != b && separates(p1, p2, contextOf({{atomF(b), atomF(a)}}), semantics, options, w)) {
        v.witness = std::move(w);
        return v;
      }
  for (const auto& a : sigma)
    if (separates(p1, p2, contextOf({{atomF(a), Formula::neg(atomF(a))}}), semantics, options, w)) {
      v.witness = std::move(w);
      return v;
    }

  if (auto t = tWitness(p1, p2, semantics, options); t && t->separates) {
    w.origin = "T(I)";
    w.context = t->context;
    w.left = t->left;
    w.right = t->right;
    w.interpretation = t->interpretation;
    w.separation = t->separation;
    v.witness = std::move(w);
    return v;
  }

  EquivalenceVerdict bounded = boundedStronglyEquivalent(p1, p2, semantics, 2, options);
  if (bounded.witness) {
    v.witness = bounded.witness;
    return v;
  }
  throw InternalError("no separating context found for G3-inequivalent programs\n" + printProgram(p1) + "--\n" +
                      printProgram(p2));
}

std::vector<Program> contextFamily(const AtomSet& pool, std::size_t k) {
  std::vector<Clause> templates = templateClauses(pool);
  std::vector<Program> out;
  const std::size_t n = templates.size();
  for (std::size_t size = 0; size <= std::min(k, n); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      std::vector<Clause> clauses;
      for (auto i : pick) clauses.push_back(templates[i]);
      out.push_back(contextOf(std::move(clauses)));
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::string freshUserAtom(const AtomSet& taken) {
  for (const char* c : {"x", "y", "z", "w", "v", "u", "t"})
    if (!taken.contains(c)) return c;
  for (std::size_t i = 1;; ++i) {
    std::string name = "fresh" + std::to_string(i);
    if (!taken.contains(name)) return name;
  }
}

EquivalenceVerdict boundedStronglyEquivalent(const Program& p1, const Program& p2, Semantics semantics, std::size_t k,
                                             const Options& options) {
  EquivalenceVerdict v;
  v.relation = Relation::StronglyEquivalent;
  v.semantics = semantics;
  v.bounded = true;
  v.bound = k;
  AtomSet all = p1.signature();
  for (const auto& a : p2.signature()) all.insert(a);
  AtomSet pool = userAtomsOf(all);
  pool.insert(freshUserAtom(all));
  Witness w;
  w.origin = "bounded";
  for (const auto& context : contextFamily(pool, k)) {
    ++v.contextsChecked;
    if (separates(p1, p2, context, semantics, options, w)) {
      v.holds = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

EquivalenceVerdict conservativeExtension(const Program& p1, const Program& p2, const Options& options) {
  if (!p1.reservedAtoms().empty())
    throw PreconditionError("the smaller program of a conservative extension must be a user program");
  EquivalenceVerdict v;
  v.relation = Relation::ConservativeExtension;
  AtomSets small = answerSets(p1, options);
  AtomSets large = answerSets(p2, options);
  AtomSet sigma = p1.signature();
  AtomSets images;
  for (const auto& m : large) {
    AtomSet r;
    std::set_intersection(m.begin(), m.end(), sigma.begin(), sigma.end(), std::inserter(r, r.end()));
    v.mapping.emplace_back(m, r);
    images.push_back(std::move(r));
  }
  AtomSets unique = images;
  sortAtomSets(unique);
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  v.holds = unique.size() == images.size() && unique == small;
  if (!v.holds) {
    Witness w;
    w.origin = "empty";
    w.left = std::move(small);
    w.right = std::move(large);
    v.witness = std::move(w);
  }
  return v;
}

EquivalenceVerdict strongConservativeExtension(const Program& p1, const Program& p2, std::size_t k,
                                               const Options& options) {
  EquivalenceVerdict v;
  v.relation = Relation::StrongConservativeExtension;
  v.bounded = true;
  v.bound = k;
  AtomSet small = p1.signature();
  AtomSet all = small;
  for (const auto& a : p2.signature()) all.insert(a);
  AtomSet pool = userAtomsOf(small);
  std::optional<std::string> fresh;
  for (const auto& a : p2.signature())
    if (!small.contains(a) && !isReservedAtomName(a)) {
      fresh = a;
      break;
    }
  pool.insert(fresh ? *fresh : freshUserAtom(all));
  for (const auto& context : contextFamily(pool, k)) {
    ++v.contextsChecked;
    EquivalenceVerdict inner = conservativeExtension(p1.united(context), p2.united(context), options);
    if (!inner.holds) {
      v.holds = false;
      v.mapping = std::move(inner.mapping);
      v.witness = std::move(inner.witness);
      v.witness->context = context;
      v.witness->origin = "bounded";
      return v;
    }
  }
  return v;
}

PipelineCheck pipelineRestriction(const Program& program, const Options& options) {
  PipelineCheck c;
  c.transform = augToDisjPipeline(program, options);
  c.answerSets = answerSetsReduct(program, options);
  c.outputResults = minAnswerSets(c.transform.program, options);
  AtomSet sigma = program.signature();
  for (const auto& m : c.outputResults) {
    AtomSet r;
    std::set_intersection(m.begin(), m.end(), sigma.begin(), sigma.end(), std::inserter(r, r.end()));
    c.mapping.emplace_back(m, r);
    c.restricted.push_back(std::move(r));
  }
  sortAtomSets(c.restricted);
  c.restricted.erase(std::unique(c.restricted.begin(), c.restricted.end()), c.restricted.end());
  c.holds = c.restricted == c.answerSets;
  if (options.checked && !c.holds)
    throw InternalError("pipeline output does not restrict to the answer sets of\n" + printProgram(program));
  return c;
}

}  // namespace nasp
