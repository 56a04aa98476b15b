#include "rigidlab/qftype.hpp"

#include "rigidlab/errors.hpp"

#include <algorithm>
#include <string>

namespace rigidlab {

QfType qf_type(const std::vector<std::uint64_t>& cyclic_orders,
               const std::vector<std::vector<std::int64_t>>& tuple) {
  const std::size_t k = cyclic_orders.size();
  const std::size_t n = tuple.size();
  // rows [s_i | e_i] and [d_j e_j | 0]; the kernel is what survives with a zero left block
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (tuple[i].size() != k) throw InputError("tuple entry has the wrong number of coordinates");
    std::vector<Integer> row(k + n);
    for (std::size_t j = 0; j < k; ++j) row[j] = static_cast<long>(tuple[i][j]);
    row[k + i] = 1;
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (cyclic_orders[j] == 0) continue;
    std::vector<Integer> row(k + n);
    row[j] = static_cast<unsigned long>(cyclic_orders[j]);
    rows.push_back(std::move(row));
  }
  auto h = hermite_rows(std::move(rows), k + n);
  QfType out;
  out.arity = n;
  for (auto& row : h) {
    if (std::any_of(row.begin(), row.begin() + static_cast<long>(k),
                    [](const Integer& v) { return v != 0; }))
      continue;
    out.basis.emplace_back(row.begin() + static_cast<long>(k), row.end());
  }
  return out;
}

QfType qf_type(const FiniteAbelianGroup& g, const std::vector<FiniteAbelianGroup::Element>& tuple) {
  std::vector<std::vector<std::int64_t>> coords;
  for (auto x : tuple) {
    if (x >= g.order()) throw InputError("element index outside the group");
    coords.push_back(g.coords(x));
  }
  return qf_type(g.orders(), coords);
}

Label QfTypeRegistry::intern(const QfType& t) {
  auto [it, fresh] = ids_.try_emplace(t, static_cast<Label>(types_.size()));
  if (fresh) types_.push_back(t);
  return it->second;
}

QuasiOrder QfTypeRegistry::order() const {
  std::vector<Label> ids(types_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Label>(i);
  return QuasiOrder::equality(std::move(ids));
}

namespace {

using Nodes = std::vector<std::pair<NodePath, Label>>;

Label label_of(const FiniteAbelianGroup& g, const NodePath& path, QfTypeRegistry& registry) {
  std::vector<FiniteAbelianGroup::Element> tuple(path.begin(), path.end());
  return registry.intern(qf_type(g, tuple));
}

template <class Admit>
void grow(const FiniteAbelianGroup& g, std::size_t depth, QfTypeRegistry& registry,
          std::size_t limit, NodePath& path, std::vector<bool>& used, Nodes& out, Admit admit) {
  if (out.size() >= limit) throw InputError("type tree exceeds the node limit");
  if (path.size() == depth) return;
  for (FiniteAbelianGroup::Element x = 0; x < g.order(); ++x) {
    if (used[x]) continue;
    path.push_back(static_cast<std::uint32_t>(x));
    Label l = label_of(g, path, registry);
    if (admit(path.size(), l)) {
      out.emplace_back(path, l);
      used[x] = true;
      grow(g, depth, registry, limit, path, used, out, admit);
      used[x] = false;
    }
    path.pop_back();
  }
}

} // namespace

LabeledTree qf_type_tree(const FiniteAbelianGroup& g, std::size_t depth, QfTypeRegistry& registry,
                         std::size_t node_limit) {
  Nodes nodes{{NodePath{}, registry.intern(qf_type(g, {}))}};
  NodePath path;
  std::vector<bool> used(g.order(), false);
  grow(g, std::min(depth, g.order()), registry, node_limit, path, used, nodes,
       [](std::size_t, Label) { return true; });
  return LabeledTree::from_nodes(std::move(nodes));
}

LabeledTree qf_type_chain(const FiniteAbelianGroup& g,
                          const std::vector<FiniteAbelianGroup::Element>& sequence,
                          QfTypeRegistry& registry) {
  std::vector<bool> used(g.order(), false);
  Nodes nodes{{NodePath{}, registry.intern(qf_type(g, {}))}};
  NodePath path;
  for (auto x : sequence) {
    if (x >= g.order() || used[x]) throw InputError("chain sequence must be injective in the group");
    used[x] = true;
    path.push_back(static_cast<std::uint32_t>(x));
    nodes.emplace_back(path, label_of(g, path, registry));
  }
  return LabeledTree::from_nodes(std::move(nodes));
}

LabeledTree qf_type_tree_along(const FiniteAbelianGroup& g, const LabeledTree& chain,
                               QfTypeRegistry& registry, std::size_t node_limit) {
  std::vector<Label> wanted(chain.max_height() + 1);
  for (LabeledTree::NodeId u = 0; u < chain.size(); ++u) wanted[chain.height(u)] = chain.label(u);
  Nodes nodes{{NodePath{}, registry.intern(qf_type(g, {}))}};
  NodePath path;
  std::vector<bool> used(g.order(), false);
  grow(g, chain.max_height(), registry, node_limit, path, used, nodes,
       [&](std::size_t h, Label l) { return wanted[h] == l; });
  return LabeledTree::from_nodes(std::move(nodes));
}

std::vector<FiniteAbelianGroup::Element> hom_from_tree_embedding(
    const FiniteAbelianGroup& a, const FiniteAbelianGroup& b, const LabeledTree& tree_a,
    const LabeledTree& tree_b, const TreeMorphism& theta,
    const std::vector<FiniteAbelianGroup::Element>& sigma, const QfTypeRegistry& registry) {
  if (!is_valid_morphism(theta, tree_a, tree_b, registry.order()))
    throw InputError("theta is not a label-preserving tree morphism");
  if (sigma.size() != a.order()) throw InputError("sigma must enumerate the whole source group");
  std::vector<FiniteAbelianGroup::Element> f(a.order(), b.order());
  NodePath prefix;
  for (std::size_t n = 0; n < sigma.size(); ++n) {
    prefix.push_back(static_cast<std::uint32_t>(sigma[n]));
    auto node = tree_a.find(prefix);
    if (!node) throw InputError("theta is defined only to depth " + std::to_string(n));
    const NodePath& image = tree_b.path(theta.image[*node]);
    if (sigma[n] >= a.order() || f[sigma[n]] != b.order())
      throw InputError("sigma is not an enumeration of the source group");
    f[sigma[n]] = image[n];
  }
  std::vector<bool> hit(b.order(), false);
  for (auto y : f) {
    if (hit[y]) throw InputError("induced map is not injective");
    hit[y] = true;
  }
  for (FiniteAbelianGroup::Element x = 0; x < a.order(); ++x)
    for (FiniteAbelianGroup::Element y = 0; y < a.order(); ++y)
      if (f[a.add(x, y)] != b.add(f[x], f[y])) throw InputError("induced map is not additive");
  return f;
}

} // namespace rigidlab
