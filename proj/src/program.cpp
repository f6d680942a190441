#include "nestedasp/program.hpp"

#include <algorithm>
#include <array>

#include "nestedasp/errors.hpp"

namespace nasp {

std::string_view toString(ProgramClass c) {
  switch (c) {
    case ProgramClass::Basic: return "basic";
    case ProgramClass::Disjunctive: return "disjunctive";
    case ProgramClass::General: return "general";
    case ProgramClass::Free: return "free";
    case ProgramClass::Augmented: return "augmented";
    case ProgramClass::Arbitrary: return "arbitrary";
  }
  return "arbitrary";
}

bool isWithin(ProgramClass c, ProgramClass target) {
  if (c == target || target == ProgramClass::Arbitrary) return true;
  switch (c) {
    case ProgramClass::Disjunctive:
      return target == ProgramClass::General || target == ProgramClass::Free ||
             target == ProgramClass::Augmented;
    case ProgramClass::General:
      return target == ProgramClass::Free || target == ProgramClass::Augmented;
    case ProgramClass::Free:
    case ProgramClass::Basic:
      return target == ProgramClass::Augmented;
    default:
      return false;
  }
}

Program::Program(std::vector<Clause> clauses, std::optional<AtomSet> declaredSignature, Origin origin)
    : clauses_(std::move(clauses)), declared_(std::move(declaredSignature)), origin_(origin) {
  AtomSet occurring = occurringAtoms();
  if (declared_) {
    for (const auto& a : occurring)
      if (!declared_->contains(a))
        throw PreconditionError("declared signature does not contain occurring atom '" + a + "'");
  }
  if (origin_ == Origin::User) {
    const AtomSet& all = declared_ ? *declared_ : occurring;
    for (const auto& a : all)
      if (isReservedAtomName(a)) throw PreconditionError("reserved atom '" + a + "' in a user program");
  }
}

std::vector<Clause> Program::distinctClauses() const {
  std::vector<Clause> out;
  std::set<Clause> seen;
  for (const auto& c : clauses_)
    if (seen.insert(c).second) out.push_back(c);
  return out;
}

std::vector<Formula> Program::formulas() const {
  std::vector<Formula> out;
  for (const auto& c : distinctClauses()) out.push_back(c.formula());
  return out;
}

AtomSet Program::occurringAtoms() const {
  AtomSet out;
  for (const auto& c : clauses_) {
    c.head.collectAtoms(out);
    c.body.collectAtoms(out);
  }
  return out;
}

AtomSet Program::signature() const {
  AtomSet out = occurringAtoms();
  if (declared_) out.insert(declared_->begin(), declared_->end());
  return out;
}

AtomSet Program::userAtoms() const {
  AtomSet out;
  for (const auto& a : signature())
    if (!isReservedAtomName(a)) out.insert(a);
  return out;
}

AtomSet Program::reservedAtoms() const {
  AtomSet out;
  for (const auto& a : signature())
    if (isReservedAtomName(a)) out.insert(a);
  return out;
}

Program Program::withDeclaredSignature(AtomSet sigma) const {
  return Program(clauses_, std::move(sigma), origin_);
}

Program Program::withOrigin(Origin origin) const { return Program(clauses_, declared_, origin); }

Program Program::united(const Program& other) const {
  std::vector<Clause> all = clauses_;
  all.insert(all.end(), other.clauses_.begin(), other.clauses_.end());
  std::optional<AtomSet> declared;
  if (declared_ || other.declared_) {
    declared = signature();
    AtomSet rhs = other.signature();
    declared->insert(rhs.begin(), rhs.end());
  }
  Origin origin = (isInternal() || other.isInternal()) ? Origin::Internal : Origin::User;
  return Program(std::move(all), std::move(declared), origin);
}

bool Program::sameMeaningAs(const Program& other) const {
  auto a = distinctClauses();
  auto b = other.distinctClauses();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && signature() == other.signature();
}

bool isBasicFormula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return isBasicFormula(f.left()) && isBasicFormula(f.right());
    case Formula::Kind::Impl:
      return f.isTop();
  }
  return false;
}

bool isNestedFormula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return isNestedFormula(f.left()) && isNestedFormula(f.right());
    case Formula::Kind::Impl:
      return f.isNeg() && isNestedFormula(f.negand());
  }
  return false;
}

Formula Literal::formula() const {
  Formula a = Formula::atom(atom);
  return negated ? Formula::neg(a) : a;
}

Clause FlatClause::clause() const {
  std::vector<Formula> h, b;
  for (const auto& l : head) h.push_back(l.formula());
  for (const auto& l : body) b.push_back(l.formula());
  return {Formula::disjAll(h), Formula::conjAll(b)};
}

namespace {

std::optional<Literal> asLiteral(const Formula& f) {
  if (f.isAtom()) return Literal{f.name(), false};
  if (f.isNeg() && f.negand().isAtom()) return Literal{f.negand().name(), true};
  return std::nullopt;
}

bool flattenInto(const Formula& f, Formula::Kind op, std::vector<Literal>& out) {
  if (f.kind() == op) return flattenInto(f.left(), op, out) && flattenInto(f.right(), op, out);
  auto lit = asLiteral(f);
  if (!lit) return false;
  out.push_back(*lit);
  return true;
}

}  // namespace

std::optional<FlatClause> flatten(const Clause& clause) {
  FlatClause out;
  if (!clause.head.isBottom() && !flattenInto(clause.head, Formula::Kind::Or, out.head)) return std::nullopt;
  if (!clause.body.isTop() && !flattenInto(clause.body, Formula::Kind::And, out.body)) return std::nullopt;
  return out;
}

namespace {

// Bit per class the clause satisfies.
unsigned clauseMask(const Clause& c) {
  auto bit = [](ProgramClass k) { return 1u << static_cast<unsigned>(k); };
  unsigned mask = bit(ProgramClass::Arbitrary);
  bool nested = isNestedFormula(c.head) && isNestedFormula(c.body);
  if (!nested) return mask;
  mask |= bit(ProgramClass::Augmented);
  if (isBasicFormula(c.head) && isBasicFormula(c.body)) mask |= bit(ProgramClass::Basic);
  if (auto flat = flatten(c)) {
    mask |= bit(ProgramClass::Free);
    bool positiveHead = std::none_of(flat->head.begin(), flat->head.end(), [](const Literal& l) { return l.negated; });
    if (positiveHead) {
      mask |= bit(ProgramClass::General);
      if (!flat->head.empty()) mask |= bit(ProgramClass::Disjunctive);
    }
  }
  return mask;
}

ProgramClass mostRestrictive(unsigned mask) {
  // Disjunctive and Basic are incomparable; the clause-form classes win.
  constexpr std::array order = {ProgramClass::Disjunctive, ProgramClass::General, ProgramClass::Free,
                                ProgramClass::Basic, ProgramClass::Augmented, ProgramClass::Arbitrary};
  for (auto k : order)
    if (mask & (1u << static_cast<unsigned>(k))) return k;
  return ProgramClass::Arbitrary;
}

}  // namespace

ProgramClass classifyClause(const Clause& clause) { return mostRestrictive(clauseMask(clause)); }

ProgramClass classify(const Program& program) {
  unsigned mask = ~0u;
  for (const auto& c : program.distinctClauses()) mask &= clauseMask(c);
  return mostRestrictive(mask);
}

AtomSet signature(const Program& program) { return program.signature(); }

AtomSet complementOf(const AtomSet& m, const AtomSet& sigma) {
  AtomSet out;
  for (const auto& a : m)
    if (!sigma.contains(a)) throw PreconditionError("atom '" + a + "' is not in the signature");
  std::set_difference(sigma.begin(), sigma.end(), m.begin(), m.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace nasp
