#include "nestedasp/multivalued.hpp"

#include <algorithm>
#include <sstream>

#include "compiled.hpp"
#include "nestedasp/errors.hpp"

namespace nasp {

Interpretation::Interpretation(int arity, std::map<std::string, int> assignment)
    : arity_(arity), values_(std::move(assignment)) {
  if (arity_ < 2) throw PreconditionError("interpretation arity must be at least 2");
  for (const auto& [atom, v] : values_)
    if (v < 0 || v >= arity_)
      throw PreconditionError("value " + std::to_string(v) + " for '" + atom + "' outside 0.." +
                              std::to_string(arity_ - 1));
}

AtomSet Interpretation::signature() const {
  AtomSet out;
  for (const auto& [atom, v] : values_) out.insert(atom);
  return out;
}

int Interpretation::operator[](const std::string& atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) throw PreconditionError("atom '" + atom + "' is outside the interpretation signature");
  return it->second;
}

bool Interpretation::isDefinite() const {
  return std::all_of(values_.begin(), values_.end(), [&](const auto& kv) { return kv.second == 0 || kv.second == top(); });
}

AtomSet Interpretation::atomsWithValue(int value) const {
  AtomSet out;
  for (const auto& [atom, v] : values_)
    if (v == value) out.insert(atom);
  return out;
}

std::string toString(const Interpretation& interp) {
  std::string out;
  for (const auto& [atom, v] : interp.assignment()) {
    if (!out.empty()) out += ' ';
    out += atom + "=" + std::to_string(v);
  }
  return out;
}

Interpretation parseInterpretation(std::string_view text, int arity) {
  std::map<std::string, int> values;
  std::istringstream in{std::string(text)};
  std::string item;
  while (in >> item) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw PreconditionError("expected atom=value, got '" + item + "'");
    std::string atom = item.substr(0, eq);
    if (!isUserAtomName(atom) && !isReservedAtomName(atom)) throw PreconditionError("invalid atom '" + atom + "'");
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw PreconditionError("invalid value in '" + item + "'");
    }
    if (!values.emplace(atom, v).second) throw PreconditionError("atom '" + atom + "' assigned twice");
  }
  return Interpretation(arity, std::move(values));
}

int evalGi(const Formula& f, const Interpretation& interp) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return interp[f.name()];
    case Formula::Kind::Bottom: return 0;
    case Formula::Kind::And: return std::min(evalGi(f.left(), interp), evalGi(f.right(), interp));
    case Formula::Kind::Or: return std::max(evalGi(f.left(), interp), evalGi(f.right(), interp));
    case Formula::Kind::Impl: {
      int a = evalGi(f.antecedent(), interp);
      int b = evalGi(f.consequent(), interp);
      return a <= b ? interp.top() : b;
    }
  }
  return 0;
}

bool modelsGi(std::span<const Formula> theory, const Interpretation& interp) {
  return std::all_of(theory.begin(), theory.end(), [&](const Formula& f) { return evalGi(f, interp) == interp.top(); });
}

bool modelsGi(const Program& program, const Interpretation& interp) {
  auto fs = program.formulas();
  return modelsGi(fs, interp);
}

namespace {

void checkCap(std::size_t atoms, int arity, const Options& options) {
  std::size_t cap = arity == 2 ? options.maxAtomsClassical : options.maxAtomsG3;
  if (atoms > cap)
    throw ResourceLimitError("enumeration over " + std::to_string(atoms) + " atoms with " + std::to_string(arity) +
                             " truth values exceeds the cap of " + std::to_string(cap));
}

// Visits every assignment in lexicographic order; stops when visit is false.
template <class Visit>
void forEachAssignment(std::size_t n, int arity, Visit&& visit) {
  std::vector<std::uint8_t> values(n, 0);
  for (;;) {
    if (!visit(values)) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (values[i] + 1 < arity) {
        ++values[i];
        break;
      }
      values[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

Interpretation toInterpretation(const std::vector<std::string>& atoms, std::span<const std::uint8_t> values,
                                int arity) {
  std::map<std::string, int> m;
  for (std::size_t i = 0; i < atoms.size(); ++i) m.emplace(atoms[i], values[i]);
  return Interpretation(arity, std::move(m));
}

}  // namespace

void forEachModel(const Program& program, int arity, const AtomSet& sigma,
                  const std::function<bool(const Interpretation&)>& visit, const Options& options) {
  if (arity < 2) throw PreconditionError("arity must be at least 2");
  for (const auto& a : program.signature())
    if (!sigma.contains(a)) throw PreconditionError("program atom '" + a + "' is outside the enumeration signature");
  checkCap(sigma.size(), arity, options);
  auto atoms = detail::atomVector(sigma);
  auto fs = program.formulas();
  detail::CompiledTheory theory(fs, atoms);
  forEachAssignment(atoms.size(), arity, [&](const std::vector<std::uint8_t>& values) {
    if (theory.evalGodel(values, arity - 1) != arity - 1) return true;
    return visit(toInterpretation(atoms, values, arity));
  });
}

std::vector<Interpretation> enumerateModels(const Program& program, int arity, const AtomSet& sigma,
                                            const Options& options) {
  std::vector<Interpretation> out;
  forEachModel(program, arity, sigma, [&](const Interpretation& i) {
    out.push_back(i);
    return true;
  }, options);
  return out;
}

bool entailsGi(std::span<const Formula> theory, const Formula& goal, int arity, const Options& options) {
  AtomSet sigma = atomsOf(theory);
  goal.collectAtoms(sigma);
  checkCap(sigma.size(), arity, options);
  auto atoms = detail::atomVector(sigma);
  detail::CompiledTheory premises(theory, atoms);
  std::vector<Formula> g{goal};
  detail::CompiledTheory conclusion(g, atoms);
  bool holds = true;
  forEachAssignment(atoms.size(), arity, [&](const std::vector<std::uint8_t>& values) {
    if (premises.evalGodel(values, arity - 1) > conclusion.evalGodel(values, arity - 1)) holds = false;
    return holds;
  });
  return holds;
}

bool isTautologyGi(const Formula& formula, int arity, const Options& options) {
  return entailsGi({}, formula, arity, options);
}

std::vector<SidedInterpretation> g3Differences(const Program& p1, const Program& p2, const Options& options) {
  AtomSet sigma = p1.signature();
  AtomSet s2 = p2.signature();
  sigma.insert(s2.begin(), s2.end());
  checkCap(sigma.size(), 3, options);
  auto atoms = detail::atomVector(sigma);
  auto f1 = p1.formulas();
  auto f2 = p2.formulas();
  detail::CompiledTheory t1(f1, atoms), t2(f2, atoms);
  std::vector<SidedInterpretation> out;
  forEachAssignment(atoms.size(), 3, [&](const std::vector<std::uint8_t>& values) {
    bool m1 = t1.evalGodel(values, 2) == 2;
    bool m2 = t2.evalGodel(values, 2) == 2;
    if (m1 != m2) out.push_back({toInterpretation(atoms, values, 3), m1 ? 1 : 2});
    return true;
  });
  return out;
}

G3Verdict g3Equivalent(const Program& p1, const Program& p2, const Options& options) {
  AtomSet sigma = p1.signature();
  AtomSet s2 = p2.signature();
  sigma.insert(s2.begin(), s2.end());
  checkCap(sigma.size(), 3, options);
  auto atoms = detail::atomVector(sigma);
  auto f1 = p1.formulas();
  auto f2 = p2.formulas();
  detail::CompiledTheory t1(f1, atoms), t2(f2, atoms);
  G3Verdict verdict;
  forEachAssignment(atoms.size(), 3, [&](const std::vector<std::uint8_t>& values) {
    bool m1 = t1.evalGodel(values, 2) == 2;
    bool m2 = t2.evalGodel(values, 2) == 2;
    if (m1 == m2) return true;
    verdict.equivalent = false;
    verdict.witness = toInterpretation(atoms, values, 3);
    verdict.witnessModels = m1 ? 1 : 2;
    return false;
  });
  return verdict;
}

Interpretation definiteCollapse(const Interpretation& interp) {
  if (interp.arity() != 3) throw PreconditionError("definiteCollapse requires a 3-valued interpretation");
  std::map<std::string, int> m;
  for (const auto& [atom, v] : interp.assignment()) m.emplace(atom, v == 0 ? 0 : 2);
  return Interpretation(3, std::move(m));
}

Program witnessProgram(const Interpretation& interp) {
  if (interp.arity() != 3) throw PreconditionError("witnessProgram requires a 3-valued interpretation");
  std::vector<Clause> clauses;
  AtomSet middle = interp.atomsWithValue(1);
  for (const auto& a : middle)
    for (const auto& b : middle)
      if (a != b) clauses.push_back({Formula::atom(b), Formula::atom(a)});
  for (const auto& a : middle) clauses.push_back({Formula::atom(a), Formula::neg(Formula::atom(a))});
  for (const auto& a : interp.atomsWithValue(2)) clauses.push_back(Clause::fact(Formula::atom(a)));
  for (const auto& a : interp.atomsWithValue(0)) clauses.push_back(Clause::constraint(Formula::atom(a)));
  bool reserved = std::any_of(interp.assignment().begin(), interp.assignment().end(),
                              [](const auto& kv) { return isReservedAtomName(kv.first); });
  return Program(std::move(clauses), interp.signature(), reserved ? Origin::Internal : Origin::User);
}

}  // namespace nasp
