#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace nasp {

using AtomSet = std::set<std::string>;

// Immutable propositional formula over atoms, bottom, and, or and
// implication. Top, negation and equivalence are abbreviations:
//   top     = bot <- bot          Impl(Bottom, Bottom)
//   not F   = bot <- F            Impl(F, Bottom)
//   F <-> G = (G <- F) & (F <- G)   And(Impl(F, G), Impl(G, F))
// Copies share structure; equality and ordering are structural.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Bottom, And, Or, Impl };

  // Bottom.
  Formula();

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula impl(Formula antecedent, Formula consequent);
  static Formula neg(Formula operand);
  static Formula iff(Formula left, Formula right);

  // Left-associated folds. An empty conjunction is top, an empty
  // disjunction is bottom.
  static Formula conjAll(std::span<const Formula> items);
  static Formula disjAll(std::span<const Formula> items);

  Kind kind() const noexcept;
  bool isAtom() const noexcept { return kind() == Kind::Atom; }
  bool isBottom() const noexcept { return kind() == Kind::Bottom; }
  bool isAnd() const noexcept { return kind() == Kind::And; }
  bool isOr() const noexcept { return kind() == Kind::Or; }
  bool isImpl() const noexcept { return kind() == Kind::Impl; }
  bool isTop() const noexcept;
  // Impl(F, Bottom) for some F. Top counts as the negation of bottom.
  bool isNeg() const noexcept;
  // not not a for an atom a.
  bool isDoubleNegatedAtom() const noexcept;

  const std::string& name() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& antecedent() const { return left(); }
  const Formula& consequent() const { return right(); }
  // Operand of a negation.
  const Formula& negand() const { return left(); }

  std::size_t hash() const noexcept;
  std::size_t size() const noexcept;

  AtomSet atoms() const;
  void collectAtoms(AtomSet& out) const;
  bool containsImpl() const noexcept;
  bool containsBottom() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, const Formula* left, const Formula* right);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;  // 0 or 2
  std::size_t hash;
  std::size_t size;
};

inline Formula::Kind Formula::kind() const noexcept { return node_->kind; }
inline std::size_t Formula::hash() const noexcept { return node_->hash; }
inline std::size_t Formula::size() const noexcept { return node_->size; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

AtomSet atomsOf(std::span<const Formula> theory);

// Negated / doubly negated atoms of a set, in atom order.
std::vector<Formula> negatedAtoms(const AtomSet& atoms);
std::vector<Formula> doubleNegatedAtoms(const AtomSet& atoms);

// Atom identifiers: [a-z][A-Za-z0-9_]* minus the keywords not, bot, top.
bool isUserAtomName(std::string_view name);
// Reserved atoms start with "__" and are only created by transformations.
bool isReservedAtomName(std::string_view name);
inline constexpr std::string_view kReservedPrefix = "__";

}  // namespace nasp
