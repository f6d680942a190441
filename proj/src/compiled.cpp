#include "compiled.hpp"

#include <algorithm>

#include "nestedasp/errors.hpp"

namespace nasp::detail {

CompiledTheory::CompiledTheory(std::span<const Formula> theory, const std::vector<std::string>& atoms) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) index.emplace(atoms[i], static_cast<int>(i));
  for (const auto& f : theory) roots_.push_back(add(f, index));
  scratch_.resize(ops_.size());
}

int CompiledTheory::add(const Formula& f, const std::map<std::string, int>& index) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  Op op{f.kind()};
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = index.find(f.name());
      if (it == index.end()) throw PreconditionError("atom '" + f.name() + "' is outside the interpretation signature");
      op.a = it->second;
      break;
    }
    case Formula::Kind::Bottom:
      break;
    default:
      op.a = add(f.left(), index);
      op.b = add(f.right(), index);
      break;
  }
  ops_.push_back(op);
  int id = static_cast<int>(ops_.size()) - 1;
  memo_.emplace(f, id);
  return id;
}

int CompiledTheory::evalGodel(std::span<const std::uint8_t> values, int top) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    std::uint8_t v = 0;
    switch (op.kind) {
      case Formula::Kind::Atom: v = values[op.a]; break;
      case Formula::Kind::Bottom: v = 0; break;
      case Formula::Kind::And: v = std::min(scratch_[op.a], scratch_[op.b]); break;
      case Formula::Kind::Or: v = std::max(scratch_[op.a], scratch_[op.b]); break;
      case Formula::Kind::Impl:
        v = scratch_[op.a] <= scratch_[op.b] ? static_cast<std::uint8_t>(top) : scratch_[op.b];
        break;
    }
    scratch_[i] = v;
  }
  int result = top;
  for (int r : roots_) result = std::min<int>(result, scratch_[r]);
  return result;
}

int CompiledTheory::evalGodelRoot(std::span<const std::uint8_t> values, int top, std::size_t root) const {
  evalGodel(values, top);
  return scratch_[roots_[root]];
}

int CompiledTheory::evalKleene(std::span<const std::uint8_t> values) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    std::uint8_t v = 0;
    switch (op.kind) {
      case Formula::Kind::Atom: v = values[op.a]; break;
      case Formula::Kind::Bottom: v = 0; break;
      case Formula::Kind::And: v = std::min(scratch_[op.a], scratch_[op.b]); break;
      case Formula::Kind::Or: v = std::max(scratch_[op.a], scratch_[op.b]); break;
      case Formula::Kind::Impl: v = std::max<std::uint8_t>(2 - scratch_[op.a], scratch_[op.b]); break;
    }
    scratch_[i] = v;
  }
  int result = 2;
  for (int r : roots_) result = std::min<int>(result, scratch_[r]);
  return result;
}

std::vector<std::string> atomVector(const AtomSet& sigma) { return {sigma.begin(), sigma.end()}; }

namespace {

struct SubsetSearch {
  const CompiledTheory& theory;
  std::vector<std::size_t> free;  // atoms of upper, branched on
  std::vector<std::uint8_t> values;
  bool strict;

  bool run(std::size_t depth, bool droppedOne) {
    if (theory.evalKleene(values) == 0) return false;
    if (depth == free.size()) return !strict || droppedOne;
    std::size_t atom = free[depth];
    // Prefer false first: finds small models early.
    values[atom] = 0;
    if (run(depth + 1, true)) return true;
    values[atom] = 2;
    if (run(depth + 1, droppedOne)) return true;
    values[atom] = 1;
    return false;
  }
};

}  // namespace

bool findSubsetModel(const CompiledTheory& theory, std::span<const std::uint8_t> upper, bool strict,
                     std::vector<std::uint8_t>* model) {
  SubsetSearch s{theory, {}, std::vector<std::uint8_t>(upper.size(), 0), strict};
  for (std::size_t i = 0; i < upper.size(); ++i)
    if (upper[i]) {
      s.free.push_back(i);
      s.values[i] = 1;
    }
  if (!s.run(0, false)) return false;
  if (model) {
    model->assign(upper.size(), 0);
    for (std::size_t i = 0; i < upper.size(); ++i) (*model)[i] = s.values[i] == 2 ? 1 : 0;
  }
  return true;
}

}  // namespace nasp::detail
