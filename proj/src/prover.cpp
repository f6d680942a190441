#include "nestedasp/prover.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nestedasp/errors.hpp"
#include "nestedasp/parser.hpp"

namespace nasp {

// ---------------------------------------------------------------- Kripke

namespace {

void collectUpset(const KripkeModel& m, std::size_t w, std::vector<std::size_t>& out) {
  out.push_back(w);
  for (auto s : m.worlds[w].successors) collectUpset(m, s, out);
}

}  // namespace

bool KripkeModel::forces(std::size_t world, const Formula& f) const {
  switch (f.kind()) {
    case Formula::Kind::Atom: return worlds.at(world).atoms.contains(f.name());
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::And: return forces(world, f.left()) && forces(world, f.right());
    case Formula::Kind::Or: return forces(world, f.left()) || forces(world, f.right());
    case Formula::Kind::Impl: {
      std::vector<std::size_t> up;
      collectUpset(*this, world, up);
      return std::all_of(up.begin(), up.end(), [&](std::size_t v) {
        return !forces(v, f.antecedent()) || forces(v, f.consequent());
      });
    }
  }
  return false;
}

bool KripkeModel::isWellFormed() const {
  if (worlds.empty()) return false;
  std::vector<int> parents(worlds.size(), 0);
  for (std::size_t w = 0; w < worlds.size(); ++w)
    for (auto s : worlds[w].successors) {
      if (s >= worlds.size() || s == 0) return false;
      ++parents[s];
      if (!std::includes(worlds[s].atoms.begin(), worlds[s].atoms.end(), worlds[w].atoms.begin(),
                         worlds[w].atoms.end()))
        return false;
    }
  for (std::size_t w = 1; w < worlds.size(); ++w)
    if (parents[w] != 1) return false;
  std::vector<std::size_t> reach;
  collectUpset(*this, 0, reach);
  std::sort(reach.begin(), reach.end());
  return std::unique(reach.begin(), reach.end()) == reach.end() && reach.size() == worlds.size();
}

bool KripkeModel::refutes(std::span<const Formula> theory, const Formula& goal) const {
  if (!isWellFormed()) return false;
  for (const auto& f : theory)
    if (!forces(0, f)) return false;
  return !forces(0, goal);
}

std::string toString(const KripkeModel& model) {
  std::ostringstream out;
  for (std::size_t w = 0; w < model.worlds.size(); ++w) {
    out << "w" << w << " {";
    bool first = true;
    for (const auto& a : model.worlds[w].atoms) {
      out << (first ? "" : ", ") << a;
      first = false;
    }
    out << "}";
    if (!model.worlds[w].successors.empty()) {
      out << " <";
      for (auto s : model.worlds[w].successors) out << " w" << s;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

void printDerivation(const Derivation& d, int depth, std::string& out) {
  out += std::string(static_cast<std::size_t>(depth) * 2, ' ') + d.sequent + "   [" + d.rule + "]\n";
  for (const auto& p : d.premises) printDerivation(*p, depth + 1, out);
}

// Subtree of `m` rooted at world `w` with `drop` (and below) removed, and
// optionally `splice` replaced by its successors.
KripkeModel rebuildModel(const KripkeModel& m, std::size_t drop, std::size_t splice) {
  KripkeModel out;
  std::function<void(std::size_t, std::size_t)> copy = [&](std::size_t from, std::size_t parent) {
    if (from == drop) return;
    if (from == splice) {
      for (auto s : m.worlds[from].successors) copy(s, parent);
      return;
    }
    std::size_t id = out.worlds.size();
    out.worlds.push_back({m.worlds[from].atoms, {}});
    if (parent != static_cast<std::size_t>(-1)) out.worlds[parent].successors.push_back(id);
    for (auto s : m.worlds[from].successors) copy(s, id);
  };
  copy(0, static_cast<std::size_t>(-1));
  return out;
}

// Greedy shrinking while the model stays a countermodel.
KripkeModel minimize(KripkeModel m, std::span<const Formula> theory, const Formula& goal) {
  constexpr auto none = static_cast<std::size_t>(-1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 1; w < m.worlds.size() && !changed; ++w) {
      for (bool spliceIt : {false, true}) {
        KripkeModel candidate = spliceIt ? rebuildModel(m, none, w) : rebuildModel(m, w, none);
        if (candidate.refutes(theory, goal)) {
          m = std::move(candidate);
          changed = true;
          break;
        }
      }
    }
  }
  return m;
}

}  // namespace

std::string toString(const Derivation& derivation) {
  std::string out;
  printDerivation(derivation, 0, out);
  return out;
}

// ---------------------------------------------------------------- prover

std::size_t IntuitionisticProver::KeyHash::operator()(const std::vector<Id>& key) const noexcept {
  std::size_t h = key.size();
  for (Id v : key) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

IntuitionisticProver::IntuitionisticProver(std::size_t budget) : budget_(budget) {
  bottom_ = make(Formula::Kind::Bottom, -1, -1);
}

IntuitionisticProver::Id IntuitionisticProver::make(Formula::Kind kind, Id left, Id right, const std::string& name) {
  auto key = std::make_tuple(static_cast<int>(kind), left, right, name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  nodes_.push_back({kind, left, right, name});
  Id id = static_cast<Id>(nodes_.size()) - 1;
  index_.emplace(std::move(key), id);
  return id;
}

IntuitionisticProver::Id IntuitionisticProver::intern(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return make(Formula::Kind::Atom, -1, -1, f.name());
    case Formula::Kind::Bottom: return bottom_;
    default: {
      Id l = intern(f.left());
      Id r = intern(f.right());
      return make(f.kind(), l, r);
    }
  }
}

Formula IntuitionisticProver::rebuild(Id id) const {
  const Node& n = nodes_[id];
  switch (n.kind) {
    case Formula::Kind::Atom: return Formula::atom(n.name);
    case Formula::Kind::Bottom: return Formula::bottom();
    case Formula::Kind::And: return Formula::conj(rebuild(n.left), rebuild(n.right));
    case Formula::Kind::Or: return Formula::disj(rebuild(n.left), rebuild(n.right));
    case Formula::Kind::Impl: return Formula::impl(rebuild(n.left), rebuild(n.right));
  }
  return Formula::bottom();
}

std::string IntuitionisticProver::show(Id id) const { return printFormula(rebuild(id)); }

std::string IntuitionisticProver::show(const Gamma& gamma, Id goal) const {
  std::string out;
  for (std::size_t i = 0; i < gamma.size(); ++i) out += (i ? ", " : "") + show(gamma[i]);
  return out + (gamma.empty() ? "|- " : " |- ") + show(goal);
}

IntuitionisticProver::Gamma IntuitionisticProver::with(Gamma g, std::initializer_list<Id> add) {
  for (Id a : add) {
    auto it = std::lower_bound(g.begin(), g.end(), a);
    if (it == g.end() || *it != a) g.insert(it, a);
  }
  return g;
}

IntuitionisticProver::Gamma IntuitionisticProver::without(const Gamma& g, Id remove) {
  Gamma out;
  out.reserve(g.size());
  for (Id x : g)
    if (x != remove) out.push_back(x);
  return out;
}

bool IntuitionisticProver::contains(const Gamma& g, Id id) const { return std::binary_search(g.begin(), g.end(), id); }

IntuitionisticProver::Step IntuitionisticProver::step(const Gamma& gamma, Id goal) {
  using K = Formula::Kind;
  if (contains(gamma, bottom_)) return {Step::Axiom, "botL", {}, {}};
  if (contains(gamma, goal)) return {Step::Axiom, "ax", {}, {}};
  for (Id f : gamma) {
    const Node n = nodes_[f];
    if (n.kind == K::And) return {Step::LeftSingle, "andL", with(without(gamma, f), {n.left, n.right}), {}, goal};
    if (n.kind == K::Or)
      return {Step::LeftBranch, "orL", with(without(gamma, f), {n.left}), with(without(gamma, f), {n.right}), goal,
              goal};
    if (n.kind != K::Impl) continue;
    const Node ante = nodes_[n.left];
    Id cons = n.right;
    if (ante.kind == K::Bottom) return {Step::LeftSingle, "impL-bot", without(gamma, f), {}, goal};
    if (ante.kind == K::Atom && contains(gamma, n.left))
      return {Step::LeftSingle, "impL-atom", with(without(gamma, f), {cons}), {}, goal};
    if (ante.kind == K::And) {
      Id inner = make(K::Impl, ante.right, cons);
      return {Step::LeftSingle, "impL-and", with(without(gamma, f), {make(K::Impl, ante.left, inner)}), {}, goal};
    }
    if (ante.kind == K::Or) {
      Id l = make(K::Impl, ante.left, cons);
      Id r = make(K::Impl, ante.right, cons);
      return {Step::LeftSingle, "impL-or", with(without(gamma, f), {l, r}), {}, goal};
    }
  }
  const Node g = nodes_[goal];
  if (g.kind == K::And) return {Step::RightBranch, "andR", gamma, gamma, g.left, g.right};
  if (g.kind == K::Impl) return {Step::RightSingle, "impR", with(gamma, {g.left}), {}, g.right};
  return {Step::Irreducible, "irreducible", {}, {}};
}

bool IntuitionisticProver::provable(const Gamma& gamma, Id goal) {
  std::vector<Id> key = gamma;
  key.push_back(-1);
  key.push_back(goal);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (++spent_ > budget_)
    throw ResourceLimitError("intuitionistic prover budget of " + std::to_string(budget_) + " sequents exceeded");
  bool result = search(gamma, goal);
  memo_.emplace(std::move(key), result);
  return result;
}

bool IntuitionisticProver::search(const Gamma& gamma, Id goal) {
  Step s = step(gamma, goal);
  switch (s.kind) {
    case Step::Axiom: return true;
    case Step::LeftSingle:
    case Step::RightSingle: return provable(s.g1, s.goal1);
    case Step::LeftBranch:
    case Step::RightBranch: return provable(s.g1, s.goal1) && provable(s.g2, s.goal2);
    case Step::Irreducible: break;
  }
  const Node g = nodes_[goal];
  if (g.kind == Formula::Kind::Or && (provable(gamma, g.left) || provable(gamma, g.right))) return true;
  for (Id f : gamma) {
    const Node n = nodes_[f];
    if (n.kind != Formula::Kind::Impl || nodes_[n.left].kind != Formula::Kind::Impl) continue;
    const Node inner = nodes_[n.left];
    Gamma rest = without(gamma, f);
    // (C -> D) -> B: when rest, D -> B proves C -> D, the theory is
    // equivalent to rest, B.
    if (provable(with(rest, {make(Formula::Kind::Impl, inner.right, n.right)}), n.left))
      return provable(with(rest, {n.right}), goal);
  }
  return false;
}

std::shared_ptr<const Derivation> IntuitionisticProver::derive(const Gamma& gamma, Id goal) {
  auto d = std::make_shared<Derivation>();
  d->sequent = show(gamma, goal);
  Step s = step(gamma, goal);
  d->rule = s.rule;
  switch (s.kind) {
    case Step::Axiom: return d;
    case Step::LeftSingle:
    case Step::RightSingle: d->premises.push_back(derive(s.g1, s.goal1)); return d;
    case Step::LeftBranch:
    case Step::RightBranch:
      d->premises.push_back(derive(s.g1, s.goal1));
      d->premises.push_back(derive(s.g2, s.goal2));
      return d;
    case Step::Irreducible: break;
  }
  const Node g = nodes_[goal];
  if (g.kind == Formula::Kind::Or) {
    if (provable(gamma, g.left)) {
      d->rule = "orR1";
      d->premises.push_back(derive(gamma, g.left));
      return d;
    }
    if (provable(gamma, g.right)) {
      d->rule = "orR2";
      d->premises.push_back(derive(gamma, g.right));
      return d;
    }
  }
  for (Id f : gamma) {
    const Node n = nodes_[f];
    if (n.kind != Formula::Kind::Impl || nodes_[n.left].kind != Formula::Kind::Impl) continue;
    Gamma rest = without(gamma, f);
    Gamma left = with(rest, {make(Formula::Kind::Impl, nodes_[n.left].right, n.right)});
    if (provable(left, n.left)) {
      d->rule = "impL-imp";
      d->premises.push_back(derive(left, n.left));
      d->premises.push_back(derive(with(rest, {n.right}), goal));
      return d;
    }
  }
  throw InternalError("derivation requested for an unprovable sequent: " + d->sequent);
}

KripkeModel IntuitionisticProver::refute(const Gamma& gamma, Id goal) {
  Step s = step(gamma, goal);
  switch (s.kind) {
    case Step::Axiom: throw InternalError("countermodel requested for an axiom: " + show(gamma, goal));
    case Step::LeftSingle:
    case Step::RightSingle: return refute(s.g1, s.goal1);
    case Step::LeftBranch:
    case Step::RightBranch:
      return provable(s.g1, s.goal1) ? refute(s.g2, s.goal2) : refute(s.g1, s.goal1);
    case Step::Irreducible: break;
  }
  std::vector<std::pair<Gamma, Id>> children;
  const Node g = nodes_[goal];
  if (g.kind == Formula::Kind::Or) {
    children.emplace_back(gamma, g.left);
    children.emplace_back(gamma, g.right);
  }
  for (Id f : gamma) {
    const Node n = nodes_[f];
    if (n.kind != Formula::Kind::Impl || nodes_[n.left].kind != Formula::Kind::Impl) continue;
    Gamma rest = without(gamma, f);
    Gamma left = with(rest, {make(Formula::Kind::Impl, nodes_[n.left].right, n.right)});
    if (provable(left, n.left)) return refute(with(rest, {n.right}), goal);
    children.emplace_back(std::move(left), n.left);
  }
  // Root holds exactly the atoms of gamma; every failed premise of a
  // non-invertible rule hangs below it.
  KripkeModel model;
  model.worlds.push_back({});
  for (Id f : gamma)
    if (nodes_[f].kind == Formula::Kind::Atom) model.worlds[0].atoms.insert(nodes_[f].name);
  for (const auto& [cg, cgoal] : children) {
    KripkeModel sub = refute(cg, cgoal);
    std::size_t offset = model.worlds.size();
    model.worlds[0].successors.push_back(offset);
    for (auto& w : sub.worlds) {
      for (auto& succ : w.successors) succ += offset;
      model.worlds.push_back(std::move(w));
    }
  }
  return model;
}

IntuitionisticProver::Gamma IntuitionisticProver::load(std::span<const Formula> theory) {
  Gamma g;
  for (const auto& f : theory) g.push_back(intern(f));
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

bool IntuitionisticProver::proves(std::span<const Formula> theory, const Formula& goal) {
  spent_ = 0;
  Gamma g = load(theory);
  return provable(g, intern(goal));
}

bool IntuitionisticProver::provesAll(std::span<const Formula> theory, std::span<const Formula> goals) {
  return std::all_of(goals.begin(), goals.end(), [&](const Formula& g) { return proves(theory, g); });
}

ProofJudgment IntuitionisticProver::judge(std::span<const Formula> theory, const Formula& goal) {
  ProofJudgment j;
  j.theory.assign(theory.begin(), theory.end());
  j.goal = goal;
  spent_ = 0;
  Gamma g = load(theory);
  Id target = intern(goal);
  j.provable = provable(g, target);
  if (j.provable) {
    j.derivation = derive(g, target);
    return j;
  }
  KripkeModel model = minimize(refute(g, target), theory, goal);
  if (!model.refutes(theory, goal))
    throw InternalError("extracted Kripke model does not refute " + show(g, target));
  j.countermodel = std::move(model);
  return j;
}

bool IntuitionisticProver::consistent(std::span<const Formula> theory) { return !proves(theory, Formula::bottom()); }

LiteralCompleteness IntuitionisticProver::literalComplete(std::span<const Formula> theory, const AtomSet& sigma) {
  LiteralCompleteness out;
  for (const auto& a : sigma) {
    Formula atom = Formula::atom(a);
    if (!proves(theory, atom) && !proves(theory, Formula::neg(atom))) out.undecided.insert(a);
  }
  out.complete = out.undecided.empty();
  return out;
}

bool IntuitionisticProver::equivalent(std::span<const Formula> t1, std::span<const Formula> t2) {
  return provesAll(t1, t2) && provesAll(t2, t1);
}

ProofJudgment provesI(std::span<const Formula> theory, const Formula& goal, const Options& options) {
  return IntuitionisticProver(options.proverBudget).judge(theory, goal);
}

bool provesAllI(std::span<const Formula> theory, std::span<const Formula> goals, const Options& options) {
  return IntuitionisticProver(options.proverBudget).provesAll(theory, goals);
}

bool consistentI(std::span<const Formula> theory, const Options& options) {
  return IntuitionisticProver(options.proverBudget).consistent(theory);
}

LiteralCompleteness literalCompleteI(std::span<const Formula> theory, const AtomSet& sigma, const Options& options) {
  return IntuitionisticProver(options.proverBudget).literalComplete(theory, sigma);
}

bool equivalentI(std::span<const Formula> t1, std::span<const Formula> t2, const Options& options) {
  return IntuitionisticProver(options.proverBudget).equivalent(t1, t2);
}

// ---------------------------------------------------------------- classes

namespace {

bool twoNegated(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::And: return twoNegated(f.left()) && twoNegated(f.right());
    case Formula::Kind::Or: return twoNegated(f.left()) || twoNegated(f.right());
    case Formula::Kind::Impl:
      if (f.isDoubleNegatedAtom()) return true;
      if (f.isNeg() && f.negand().isNeg() && twoNegated(f.negand().negand())) return true;
      return twoNegated(f.consequent());
    default: return false;
  }
}

}  // namespace

FormulaClassTags classifyFormula(const Formula& f) { return {!f.containsBottom(), twoNegated(f)}; }

std::vector<Formula> positiveSubset(std::span<const Formula> gamma) {
  std::vector<Formula> out;
  for (const auto& f : gamma)
    if (classifyFormula(f).isPositive) out.push_back(f);
  return out;
}

}  // namespace nasp
