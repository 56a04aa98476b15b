#pragma once

#include "rigidlab/abelian.hpp"
#include "rigidlab/labeled_tree.hpp"

#include <compare>
#include <map>
#include <vector>

namespace rigidlab {

// Relation lattice {c in Z^arity : sum c_i s_i = 0} in Hermite normal form.
struct QfType {
  std::size_t arity = 0;
  std::vector<std::vector<Integer>> basis;

  bool operator==(const QfType&) const = default;
  bool operator<(const QfType& o) const {
    if (arity != o.arity) return arity < o.arity;
    return basis < o.basis;
  }
};

// General form: cyclic orders with 0 for an infinite cyclic summand;
// each tuple entry is a coordinate vector.
QfType qf_type(const std::vector<std::uint64_t>& cyclic_orders,
               const std::vector<std::vector<std::int64_t>>& tuple);
QfType qf_type(const FiniteAbelianGroup& g, const std::vector<FiniteAbelianGroup::Element>& tuple);

// Interns types as tree labels. The label order is equality.
class QfTypeRegistry {
public:
  Label intern(const QfType& t);
  const QfType& type(Label l) const { return types_.at(l); }
  std::size_t size() const { return types_.size(); }
  QuasiOrder order() const;

private:
  std::map<QfType, Label> ids_;
  std::vector<QfType> types_;
};

// Injective sequences of length <= depth over element indices, labeled by type.
// Throws InputError when the tree would exceed node_limit nodes.
LabeledTree qf_type_tree(const FiniteAbelianGroup& g, std::size_t depth, QfTypeRegistry& registry,
                         std::size_t node_limit = 2'000'000);

// The chain of prefixes of one injective sequence.
LabeledTree qf_type_chain(const FiniteAbelianGroup& g,
                          const std::vector<FiniteAbelianGroup::Element>& sequence,
                          QfTypeRegistry& registry);

// The part of the type tree of g whose node at height k has the same label as
// node k of the given chain; any morphism from the chain lands inside it.
LabeledTree qf_type_tree_along(const FiniteAbelianGroup& g, const LabeledTree& chain,
                               QfTypeRegistry& registry, std::size_t node_limit = 2'000'000);

// f(sigma(n)) = last entry of theta(sigma | n+1). Throws InputError if theta is
// not a label-equality morphism, misses a prefix of sigma, or f is not an
// injective homomorphism.
std::vector<FiniteAbelianGroup::Element> hom_from_tree_embedding(
    const FiniteAbelianGroup& a, const FiniteAbelianGroup& b, const LabeledTree& tree_a,
    const LabeledTree& tree_b, const TreeMorphism& theta,
    const std::vector<FiniteAbelianGroup::Element>& sigma, const QfTypeRegistry& registry);

} // namespace rigidlab
