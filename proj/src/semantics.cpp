#include "nestedasp/semantics.hpp"

#include <algorithm>

#include "compiled.hpp"
#include "nestedasp/errors.hpp"
#include "nestedasp/multivalued.hpp"
#include "nestedasp/parser.hpp"

namespace nasp {

bool atomSetLess(const AtomSet& a, const AtomSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sortAtomSets(AtomSets& sets) { std::sort(sets.begin(), sets.end(), atomSetLess); }

std::string_view toString(Method m) {
  switch (m) {
    case Method::Reduct: return "reduct";
    case Method::Intuitionistic: return "intuitionistic";
    case Method::Both: return "both";
  }
  return "both";
}

std::string_view toString(SemanticsKind s) {
  switch (s) {
    case SemanticsKind::Answer: return "answer";
    case SemanticsKind::MinAnswer: return "min-answer";
    case SemanticsKind::MinimalModel: return "minimal-model";
    case SemanticsKind::MinimalAnswer: return "minimal-answer";
  }
  return "answer";
}

namespace {

void requireAugmented(const Program& p, std::string_view op) {
  ProgramClass c = classify(p);
  if (!isWithin(c, ProgramClass::Augmented))
    throw PreconditionError(std::string(op) + " expects an augmented program, got " + std::string(toString(c)));
}

bool isAugmented(const Program& p) { return isWithin(classify(p), ProgramClass::Augmented); }

std::vector<std::string> cappedSignature(const Program& p, const Options& options) {
  AtomSet sigma = p.signature();
  if (sigma.size() > options.maxAtomsClassical)
    throw ResourceLimitError("candidate enumeration over " + std::to_string(sigma.size()) +
                             " atoms exceeds the cap of " + std::to_string(options.maxAtomsClassical));
  return detail::atomVector(sigma);
}

// Subsets of `atoms` by cardinality, then lexicographically.
template <class Visit>
void forEachCandidate(const std::vector<std::string>& atoms, Visit&& visit) {
  const std::size_t n = atoms.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      AtomSet m;
      for (auto i : pick) m.insert(atoms[i]);
      visit(m);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

std::vector<std::uint8_t> maskOf(const std::vector<std::string>& atoms, const AtomSet& m) {
  std::vector<std::uint8_t> mask(atoms.size(), 0);
  for (std::size_t i = 0; i < atoms.size(); ++i) mask[i] = m.contains(atoms[i]) ? 1 : 0;
  return mask;
}

AtomSet setOf(const std::vector<std::string>& atoms, std::span<const std::uint8_t> mask) {
  AtomSet m;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (mask[i]) m.insert(atoms[i]);
  return m;
}

void requireSubset(const AtomSet& m, const AtomSet& sigma) { (void)complementOf(m, sigma); }

Formula reductOf(const Formula& f, const AtomSet& x) {
  if (f.isTop()) return f;
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::And: return Formula::conj(reductOf(f.left(), x), reductOf(f.right(), x));
    case Formula::Kind::Or: return Formula::disj(reductOf(f.left(), x), reductOf(f.right(), x));
    case Formula::Kind::Impl:
      if (!f.isNeg()) throw PreconditionError("reduct of an embedded implication");
      return satisfiesBasic(x, reductOf(f.negand(), x)) ? Formula::bottom() : Formula::top();
  }
  return f;
}

bool reductCheck(const Program& program, const std::vector<std::string>& atoms, const AtomSet& x) {
  Program r = reduct(program, x);
  auto fs = r.formulas();
  detail::CompiledTheory theory(fs, atoms);
  auto mask = maskOf(atoms, x);
  if (theory.evalGodel(mask, 1) != 1) return false;
  return !detail::findSubsetModel(theory, mask, true);
}

bool intuitionisticCheck(IntuitionisticProver& prover, const std::vector<Formula>& theory, const AtomSet& m) {
  if (!prover.consistent(theory)) return false;
  return std::all_of(m.begin(), m.end(), [&](const std::string& a) { return prover.proves(theory, Formula::atom(a)); });
}

AtomSets intersect(const AtomSets& a, const AtomSets& b) {
  AtomSets out;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  return out;
}

AtomSets minimalElements(const AtomSets& sets) {
  AtomSets out;
  for (const auto& x : sets) {
    bool minimal = std::none_of(sets.begin(), sets.end(), [&](const AtomSet& y) {
      return y.size() < x.size() && std::includes(x.begin(), x.end(), y.begin(), y.end());
    });
    if (minimal) out.push_back(x);
  }
  return out;
}

void agree(const AtomSets& a, const AtomSets& b, std::string_view what, const Program& p) {
  if (a != b)
    throw InternalError(std::string(what) + ": the two routes disagree on\n" + printProgram(p));
}

}  // namespace

bool satisfiesBasic(const AtomSet& x, const Formula& f) {
  if (f.isTop()) return true;
  switch (f.kind()) {
    case Formula::Kind::Atom: return x.contains(f.name());
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::And: return satisfiesBasic(x, f.left()) && satisfiesBasic(x, f.right());
    case Formula::Kind::Or: return satisfiesBasic(x, f.left()) || satisfiesBasic(x, f.right());
    case Formula::Kind::Impl: break;
  }
  throw PreconditionError("satisfiesBasic on non-basic formula " + printFormula(f));
}

Program reduct(const Program& program, const AtomSet& x) {
  requireAugmented(program, "reduct");
  std::vector<Clause> out;
  for (const auto& c : program.clauses()) out.push_back({reductOf(c.head, x), reductOf(c.body, x)});
  return Program(std::move(out), program.signature(), program.origin());
}

std::vector<Formula> answerSetTheory(const Program& program, const AtomSet& m) {
  AtomSet sigma = program.signature();
  std::vector<Formula> t = program.formulas();
  auto neg = negatedAtoms(complementOf(m, sigma));
  auto nn = doubleNegatedAtoms(m);
  t.insert(t.end(), neg.begin(), neg.end());
  t.insert(t.end(), nn.begin(), nn.end());
  return t;
}

std::vector<Formula> minAnswerTheory(const Program& program, const AtomSet& m) {
  std::vector<Formula> t = program.formulas();
  auto neg = negatedAtoms(complementOf(m, program.signature()));
  t.insert(t.end(), neg.begin(), neg.end());
  return t;
}

bool isAnswerSetReduct(const Program& program, const AtomSet& m, const Options& options) {
  requireAugmented(program, "answerSetsReduct");
  requireSubset(m, program.signature());
  return reductCheck(program, cappedSignature(program, options), m);
}

bool isAnswerSetIntuitionistic(const Program& program, const AtomSet& m, const Options& options) {
  IntuitionisticProver prover(options.proverBudget);
  return intuitionisticCheck(prover, answerSetTheory(program, m), m);
}

AtomSets answerSetsReduct(const Program& program, const Options& options) {
  requireAugmented(program, "answerSetsReduct");
  auto atoms = cappedSignature(program, options);
  AtomSets out;
  forEachCandidate(atoms, [&](const AtomSet& x) {
    if (reductCheck(program, atoms, x)) out.push_back(x);
  });
  return out;
}

AtomSets answerSetsIntuitionistic(const Program& program, const Options& options) {
  auto atoms = cappedSignature(program, options);
  IntuitionisticProver prover(options.proverBudget);
  AtomSets out;
  forEachCandidate(atoms, [&](const AtomSet& m) {
    if (intuitionisticCheck(prover, answerSetTheory(program, m), m)) out.push_back(m);
  });
  return out;
}

AtomSets answerSets(const Program& program, const Options& options) {
  if (!isAugmented(program)) return answerSetsIntuitionistic(program, options);
  AtomSets viaReduct = answerSetsReduct(program, options);
  if (options.checked) agree(viaReduct, answerSetsIntuitionistic(program, options), "answer sets", program);
  return viaReduct;
}

AtomSets minimalModels(const Program& program, const Options& options) {
  auto atoms = cappedSignature(program, options);
  auto fs = program.formulas();
  detail::CompiledTheory theory(fs, atoms);
  AtomSets models;
  forEachCandidate(atoms, [&](const AtomSet& m) {
    if (theory.evalGodel(maskOf(atoms, m), 1) == 1) models.push_back(m);
  });
  AtomSets out = minimalElements(models);
  if (options.checked) agree(out, minimalModelsByProvability(program, options), "minimal models", program);
  return out;
}

AtomSets minimalModelsByProvability(const Program& program, const Options& options) {
  auto atoms = cappedSignature(program, options);
  AtomSets out;
  forEachCandidate(atoms, [&](const AtomSet& m) {
    auto t = minAnswerTheory(program, m);
    if (entailsGi(t, Formula::bottom(), 2, options)) return;
    bool all = std::all_of(m.begin(), m.end(),
                           [&](const std::string& a) { return entailsGi(t, Formula::atom(a), 2, options); });
    if (all) out.push_back(m);
  });
  return out;
}

bool isMinimalModel(const Program& program, const AtomSet& m, const Options& options) {
  requireSubset(m, program.signature());
  auto atoms = cappedSignature(program, options);
  auto fs = program.formulas();
  detail::CompiledTheory theory(fs, atoms);
  auto mask = maskOf(atoms, m);
  return theory.evalGodel(mask, 1) == 1 && !detail::findSubsetModel(theory, mask, true);
}

AtomSets minAnswerSetsIntuitionistic(const Program& program, const Options& options) {
  auto atoms = cappedSignature(program, options);
  IntuitionisticProver prover(options.proverBudget);
  AtomSets out;
  forEachCandidate(atoms, [&](const AtomSet& m) {
    if (intuitionisticCheck(prover, minAnswerTheory(program, m), m)) out.push_back(m);
  });
  return out;
}

AtomSets minAnswerSets(const Program& program, const Options& options) {
  Options fast = options;
  fast.checked = false;
  AtomSets out = intersect(answerSets(program, options), minimalModels(program, options));
  if (options.checked && isAugmented(program))
    agree(out, minAnswerSetsIntuitionistic(program, fast), "min-answer sets", program);
  return out;
}

AtomSets minimalAnswerSets(const Program& program, const Options& options) {
  return minimalElements(answerSets(program, options));
}

bool safeBeliefs(const Program& program, const AtomSet& m, const Options& options) {
  AtomSet sigma = program.signature();
  AtomSet rest = complementOf(m, sigma);
  std::vector<Formula> closure;
  for (const auto& a : m) closure.push_back(Formula::atom(a));
  for (const auto& a : rest) closure.push_back(Formula::neg(Formula::atom(a)));
  std::vector<Formula> theory = program.formulas();
  for (const auto& f : closure) theory.push_back(Formula::neg(Formula::neg(f)));
  IntuitionisticProver prover(options.proverBudget);
  return prover.consistent(theory) && prover.provesAll(theory, closure);
}

AnswerSetReport analyze(const Program& program, const AtomSet& candidate, Method method, const Options& options) {
  AnswerSetReport r;
  r.candidate = candidate;
  r.method = method;
  bool augmented = isAugmented(program);
  if (method == Method::Reduct && !augmented) throw PreconditionError("the reduct method needs an augmented program");
  std::optional<bool> byReduct, byProof;
  if (method != Method::Intuitionistic && augmented) byReduct = isAnswerSetReduct(program, candidate, options);
  if (method != Method::Reduct) byProof = isAnswerSetIntuitionistic(program, candidate, options);
  if (byReduct && byProof && *byReduct != *byProof)
    throw InternalError("answer-set routes disagree on a candidate of\n" + printProgram(program));
  r.isAnswerSet = byReduct ? *byReduct : *byProof;
  r.isMinimalModel = isMinimalModel(program, candidate, options);
  r.isMinAnswerSet = r.isAnswerSet && r.isMinimalModel;
  if (augmented) r.reduct = reduct(program, candidate);
  return r;
}

AtomSets solve(const Program& program, SemanticsKind semantics, Method method, const Options& options) {
  Options opts = options;
  auto answers = [&]() {
    switch (method) {
      case Method::Reduct: return answerSetsReduct(program, opts);
      case Method::Intuitionistic: return answerSetsIntuitionistic(program, opts);
      case Method::Both: {
        Options checked = opts;
        checked.checked = true;
        return answerSets(program, checked);
      }
    }
    return AtomSets{};
  };
  switch (semantics) {
    case SemanticsKind::Answer: return answers();
    case SemanticsKind::MinimalModel: {
      if (method == Method::Both) opts.checked = true;
      return minimalModels(program, opts);
    }
    case SemanticsKind::MinimalAnswer: return minimalElements(answers());
    case SemanticsKind::MinAnswer: {
      if (method == Method::Intuitionistic && isAugmented(program)) return minAnswerSetsIntuitionistic(program, opts);
      if (method == Method::Both) opts.checked = true;
      if (method == Method::Reduct) requireAugmented(program, "the reduct method");
      if (method == Method::Intuitionistic) return intersect(answerSetsIntuitionistic(program, opts), minimalModels(program, opts));
      return minAnswerSets(program, opts);
    }
  }
  return {};
}

}  // namespace nasp
