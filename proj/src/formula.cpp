#include "nestedasp/formula.hpp"

#include <functional>
#include <stdexcept>

#include "nestedasp/errors.hpp"

namespace nasp {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const Formula& bottomSingleton() {
  static const Formula f = Formula::bottom();
  return f;
}

}  // namespace

Formula::Formula() : Formula(bottomSingleton()) {}

Formula Formula::make(Kind kind, std::string name, const Formula* left, const Formula* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->hash = mix(std::hash<int>{}(static_cast<int>(kind)), std::hash<std::string>{}(name));
  node->size = 1;
  node->name = std::move(name);
  if (left != nullptr) {
    node->children = {*left, *right};
    node->hash = mix(mix(node->hash, left->hash()), right->hash());
    node->size += left->size() + right->size();
  }
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw PreconditionError("atom name must be nonempty");
  return make(Kind::Atom, std::move(name), nullptr, nullptr);
}

Formula Formula::bottom() {
  // Constructed directly: the default constructor depends on this.
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bottom;
  node->hash = mix(std::hash<int>{}(static_cast<int>(Kind::Bottom)), 0);
  node->size = 1;
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula t = impl(bottom(), bottom());
  return t;
}

Formula Formula::conj(Formula left, Formula right) { return make(Kind::And, {}, &left, &right); }
Formula Formula::disj(Formula left, Formula right) { return make(Kind::Or, {}, &left, &right); }
Formula Formula::impl(Formula antecedent, Formula consequent) {
  return make(Kind::Impl, {}, &antecedent, &consequent);
}
Formula Formula::neg(Formula operand) { return impl(std::move(operand), bottom()); }
Formula Formula::iff(Formula left, Formula right) {
  return conj(impl(left, right), impl(right, left));
}

Formula Formula::conjAll(std::span<const Formula> items) {
  if (items.empty()) return top();
  Formula acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = conj(acc, items[i]);
  return acc;
}

Formula Formula::disjAll(std::span<const Formula> items) {
  if (items.empty()) return bottom();
  Formula acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = disj(acc, items[i]);
  return acc;
}

bool Formula::isTop() const noexcept {
  return isImpl() && left().isBottom() && right().isBottom();
}

bool Formula::isNeg() const noexcept { return isImpl() && right().isBottom(); }

bool Formula::isDoubleNegatedAtom() const noexcept {
  return isNeg() && negand().isNeg() && negand().negand().isAtom();
}

const std::string& Formula::name() const {
  if (!isAtom()) throw std::logic_error("Formula::name on non-atom");
  return node_->name;
}

const Formula& Formula::left() const {
  if (node_->children.empty()) throw std::logic_error("Formula::left on leaf");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.empty()) throw std::logic_error("Formula::right on leaf");
  return node_->children[1];
}

void Formula::collectAtoms(AtomSet& out) const {
  if (isAtom()) {
    out.insert(node_->name);
    return;
  }
  for (const auto& c : node_->children) c.collectAtoms(out);
}

AtomSet Formula::atoms() const {
  AtomSet out;
  collectAtoms(out);
  return out;
}

bool Formula::containsImpl() const noexcept {
  if (isImpl()) return true;
  for (const auto& c : node_->children)
    if (c.containsImpl()) return true;
  return false;
}

bool Formula::containsBottom() const noexcept {
  if (isBottom()) return true;
  for (const auto& c : node_->children)
    if (c.containsBottom()) return true;
  return false;
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.node_->name != b.node_->name) return false;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i)
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  return true;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.node_->name <=> b.node_->name; c != 0) return c;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i)
    if (auto c = a.node_->children[i] <=> b.node_->children[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

AtomSet atomsOf(std::span<const Formula> theory) {
  AtomSet out;
  for (const auto& f : theory) f.collectAtoms(out);
  return out;
}

std::vector<Formula> negatedAtoms(const AtomSet& atoms) {
  std::vector<Formula> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) out.push_back(Formula::neg(Formula::atom(a)));
  return out;
}

std::vector<Formula> doubleNegatedAtoms(const AtomSet& atoms) {
  std::vector<Formula> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) out.push_back(Formula::neg(Formula::neg(Formula::atom(a))));
  return out;
}

bool isUserAtomName(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "not" && name != "bot" && name != "top";
}

bool isReservedAtomName(std::string_view name) { return name.starts_with(kReservedPrefix); }

}  // namespace nasp
