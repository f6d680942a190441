#include "nestedasp/transforms.hpp"

#include <algorithm>

#include "nestedasp/errors.hpp"
#include "nestedasp/multivalued.hpp"
#include "nestedasp/parser.hpp"

namespace nasp {

void FreshAtomRegistry::reserve(const AtomSet& atoms) { taken_.insert(atoms.begin(), atoms.end()); }

std::string FreshAtomRegistry::issue(const std::string& stem) {
  std::string name = std::string(kReservedPrefix) + stem;
  while (taken_.contains(name)) name = std::string(kReservedPrefix) + stem + "_" + std::to_string(++counter_);
  taken_.insert(name);
  return name;
}

const std::string& FreshAtomRegistry::replacementFor(const std::string& atom) {
  auto it = phi_.find(atom);
  if (it == phi_.end()) it = phi_.emplace(atom, issue("not_" + atom)).first;
  return it->second;
}

const std::string& FreshAtomRegistry::constraintAtom() {
  if (!constraint_) constraint_ = issue("p");
  return *constraint_;
}

AtomSet FreshAtomRegistry::issued() const {
  AtomSet out;
  for (const auto& [a, r] : phi_) out.insert(r);
  if (constraint_) out.insert(*constraint_);
  return out;
}

namespace {

void requireClass(const Program& p, ProgramClass needed, std::string_view op) {
  ProgramClass c = classify(p);
  if (!isWithin(c, needed))
    throw PreconditionError(std::string(op) + " expects a " + std::string(toString(needed)) + " program, got " +
                            std::string(toString(c)));
}

std::optional<AtomSet> extendDeclared(const Program& p, const AtomSet& added) {
  if (!p.declaredSignature()) return std::nullopt;
  AtomSet out = *p.declaredSignature();
  out.insert(added.begin(), added.end());
  return out;
}

// ---- augToFree normal forms

// Literal with 0, 1 or 2 leading negations.
struct NLit {
  std::string atom;
  int negs = 0;
  friend bool operator==(const NLit&, const NLit&) = default;
};

using Lits = std::vector<NLit>;
using Matrix = std::vector<Lits>;

struct Nnf {
  enum Kind { Lit, Top, Bot, And, Or } kind;
  NLit lit;
  std::vector<Nnf> kids;
};

// Negation normal form of (not^k f) for k = 0, 1, 2; three negations
// collapse to one.
Nnf nnf(const Formula& f, int k) {
  if (f.isTop()) return {k == 1 ? Nnf::Bot : Nnf::Top, {}, {}};
  switch (f.kind()) {
    case Formula::Kind::Atom: return {Nnf::Lit, {f.name(), k}, {}};
    case Formula::Kind::Bottom: return {k == 1 ? Nnf::Top : Nnf::Bot, {}, {}};
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool flips = k == 1;
      Nnf::Kind op = (f.isAnd() != flips) ? Nnf::And : Nnf::Or;
      return {op, {}, {nnf(f.left(), k), nnf(f.right(), k)}};
    }
    case Formula::Kind::Impl:
      // Only negations reach here in augmented input.
      return nnf(f.negand(), k == 1 ? 2 : 1);
  }
  return {Nnf::Bot, {}, {}};
}

void dedupe(Lits& lits) {
  Lits out;
  for (auto& l : lits)
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
  lits = std::move(out);
}

Matrix cross(const Matrix& a, const Matrix& b, std::size_t cap) {
  if (a.size() * b.size() > cap) throw ResourceLimitError("normal form exceeds the clause budget");
  Matrix out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Lits row = x;
      row.insert(row.end(), y.begin(), y.end());
      dedupe(row);
      out.push_back(std::move(row));
    }
  return out;
}

Matrix concat(Matrix a, const Matrix& b, std::size_t cap) {
  a.insert(a.end(), b.begin(), b.end());
  if (a.size() > cap) throw ResourceLimitError("normal form exceeds the clause budget");
  return a;
}

// Conjunction of disjunctions. Top is {}, bottom is {{}}.
Matrix cnf(const Nnf& n, std::size_t cap) {
  switch (n.kind) {
    case Nnf::Lit: return {{n.lit}};
    case Nnf::Top: return {};
    case Nnf::Bot: return {{}};
    case Nnf::And: return concat(cnf(n.kids[0], cap), cnf(n.kids[1], cap), cap);
    case Nnf::Or: return cross(cnf(n.kids[0], cap), cnf(n.kids[1], cap), cap);
  }
  return {};
}

// Disjunction of conjunctions. Top is {{}}, bottom is {}.
Matrix dnf(const Nnf& n, std::size_t cap) {
  switch (n.kind) {
    case Nnf::Lit: return {{n.lit}};
    case Nnf::Top: return {{}};
    case Nnf::Bot: return {};
    case Nnf::And: return cross(dnf(n.kids[0], cap), dnf(n.kids[1], cap), cap);
    case Nnf::Or: return concat(dnf(n.kids[0], cap), dnf(n.kids[1], cap), cap);
  }
  return {};
}

Formula litFormula(const NLit& l) {
  Formula f = Formula::atom(l.atom);
  for (int i = 0; i < l.negs; ++i) f = Formula::neg(f);
  return f;
}

Clause buildClause(const Lits& head, const Lits& body) {
  std::vector<Formula> h, b;
  for (const auto& l : head) h.push_back(litFormula(l));
  for (const auto& l : body) b.push_back(litFormula(l));
  return {Formula::disjAll(h), Formula::conjAll(b)};
}

std::vector<Clause> unwind(const Clause& clause, std::size_t cap) {
  // Free clauses are already in final form.
  if (flatten(clause)) return {clause};
  Matrix heads = cnf(nnf(clause.head, 0), cap);
  Matrix bodies = dnf(nnf(clause.body, 0), cap);
  if (heads.size() * bodies.size() > cap) throw ResourceLimitError("augToFree exceeds the clause budget");
  std::vector<Clause> out;
  for (const auto& h : heads)
    for (const auto& b : bodies) {
      Lits head, body, moved;
      for (const auto& l : h) {
        if (l.negs == 2) {
          moved.push_back({l.atom, 1});
        } else {
          head.push_back(l);
        }
      }
      body = moved;
      for (const auto& l : b) {
        if (l.negs == 2) {
          head.push_back({l.atom, 1});
        } else {
          body.push_back(l);
        }
      }
      dedupe(head);
      dedupe(body);
      out.push_back(buildClause(head, body));
    }
  return out;
}

}  // namespace

TransformResult augToFree(const Program& program, const Options& options) {
  requireClass(program, ProgramClass::Augmented, "augToFree");
  std::vector<Clause> out;
  for (const auto& c : program.clauses()) {
    auto pieces = unwind(c, options.maxTransformClauses);
    if (options.checked) {
      Program before({c}, std::nullopt, Origin::Internal);
      Program after(pieces, std::nullopt, Origin::Internal);
      if (!g3Equivalent(before, after, options).equivalent)
        throw InternalError("augToFree changed the G3 meaning of clause " + printClause(c));
    }
    out.insert(out.end(), pieces.begin(), pieces.end());
    if (out.size() > options.maxTransformClauses) throw ResourceLimitError("augToFree exceeds the clause budget");
  }
  TransformResult r;
  r.program = Program(std::move(out), program.declaredSignature(), program.origin());
  r.trace.push_back({"augToFree", program, r.program, r.registry});
  return r;
}

TransformResult freeToGen(const Program& program, FreshAtomRegistry registry, const Options&) {
  requireClass(program, ProgramClass::Free, "freeToGen");
  registry.reserve(program.signature());
  std::vector<FlatClause> flat;
  AtomSet negatedInHeads;
  for (const auto& c : program.clauses()) {
    flat.push_back(*flatten(c));
    for (const auto& l : flat.back().head)
      if (l.negated) negatedInHeads.insert(l.atom);
  }
  AtomSet fresh;
  for (const auto& a : negatedInHeads) fresh.insert(registry.replacementFor(a));
  auto replace = [&](std::vector<Literal>& lits) {
    for (auto& l : lits)
      if (l.negated && negatedInHeads.contains(l.atom)) l = {registry.replacementFor(l.atom), false};
  };
  std::vector<Clause> out;
  for (auto& fc : flat) {
    replace(fc.head);
    replace(fc.body);
    out.push_back(fc.clause());
  }
  for (const auto& a : negatedInHeads) {
    Formula atom = Formula::atom(a);
    Formula phi = Formula::atom(registry.replacementFor(a));
    out.push_back({phi, Formula::neg(atom)});
    out.push_back(Clause::constraint(Formula::conj(atom, phi)));
  }
  TransformResult r;
  r.program = Program(std::move(out), extendDeclared(program, fresh), Origin::Internal);
  r.registry = registry;
  r.trace.push_back({"freeToGen", program, r.program, r.registry});
  return r;
}

TransformResult genToDisj(const Program& program, FreshAtomRegistry registry, const Options&) {
  requireClass(program, ProgramClass::General, "genToDisj");
  registry.reserve(program.signature());
  std::vector<Clause> out;
  AtomSet fresh;
  bool anyConstraint = false;
  for (const auto& c : program.clauses()) {
    FlatClause fc = *flatten(c);
    if (fc.head.empty()) {
      const std::string& p = registry.constraintAtom();
      fresh.insert(p);
      anyConstraint = true;
      fc.head.push_back({p, false});
      fc.body.push_back({p, true});
      out.push_back(fc.clause());
    } else {
      out.push_back(c);
    }
  }
  TransformResult r;
  Origin origin = anyConstraint ? Origin::Internal : program.origin();
  r.program = Program(std::move(out), extendDeclared(program, fresh), origin);
  r.registry = registry;
  r.trace.push_back({"genToDisj", program, r.program, r.registry});
  return r;
}

TransformResult augToDisjPipeline(const Program& program, const Options& options) {
  TransformResult free = augToFree(program, options);
  TransformResult general = freeToGen(free.program, free.registry, options);
  TransformResult disjunctive = genToDisj(general.program, general.registry, options);
  TransformResult r;
  r.program = disjunctive.program;
  r.registry = disjunctive.registry;
  for (auto* part : {&free, &general, &disjunctive}) r.trace.insert(r.trace.end(), part->trace.begin(), part->trace.end());
  return r;
}

Program redu1(const Program& program, const AtomSet& negated) {
  requireClass(program, ProgramClass::General, "redu1");
  std::vector<Clause> out;
  for (const auto& c : program.clauses()) {
    FlatClause fc = *flatten(c);
    bool drop = std::any_of(fc.body.begin(), fc.body.end(),
                            [&](const Literal& l) { return !l.negated && negated.contains(l.atom); });
    if (drop) continue;
    std::erase_if(fc.body, [&](const Literal& l) { return l.negated && negated.contains(l.atom); });
    std::erase_if(fc.head, [&](const Literal& l) { return negated.contains(l.atom); });
    out.push_back(fc.clause());
  }
  return Program(std::move(out), std::nullopt, program.origin());
}

Program redu2(const Program& program, const AtomSet& doubleNegated) {
  requireClass(program, ProgramClass::General, "redu2");
  std::vector<Clause> out;
  for (const auto& c : program.clauses()) {
    FlatClause fc = *flatten(c);
    bool drop = std::any_of(fc.body.begin(), fc.body.end(),
                            [&](const Literal& l) { return l.negated && doubleNegated.contains(l.atom); });
    if (drop) continue;
    if (fc.head.empty())
      std::erase_if(fc.body, [&](const Literal& l) { return !l.negated && doubleNegated.contains(l.atom); });
    out.push_back(fc.clause());
  }
  return Program(std::move(out), std::nullopt, program.origin());
}

}  // namespace nasp
