#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rigidlab {

using Label = std::uint32_t;
using NodePath = std::vector<std::uint32_t>;

// Finite quasi-order given by an explicit relation table.
class QuasiOrder {
public:
  // Throws InputError if the relation is not reflexive and transitive on elements.
  QuasiOrder(std::vector<Label> elements, const std::vector<std::pair<Label, Label>>& leq);

  static QuasiOrder equality(std::vector<Label> elements);
  // 0 <= 1 <= ... <= size-1
  static QuasiOrder chain(std::size_t size);

  bool contains(Label l) const { return index_.count(l) != 0; }
  // Throws InputError for labels outside the element set.
  bool leq(Label a, Label b) const;

  const std::vector<Label>& elements() const { return elements_; }
  std::vector<std::pair<Label, Label>> pairs() const;

private:
  QuasiOrder() = default;
  std::size_t position(Label l) const;

  std::vector<Label> elements_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<std::vector<bool>> rel_;
};

// Nodes are kept in lexicographic order of their paths, so node 0 is the root
// and every parent precedes its children.
class LabeledTree {
public:
  using NodeId = std::size_t;

  // Throws InputError unless the paths are distinct, prefix closed and include the root.
  static LabeledTree from_nodes(std::vector<std::pair<NodePath, Label>> nodes);
  static LabeledTree single(Label root_label);

  std::size_t size() const { return paths_.size(); }
  NodeId root() const { return 0; }
  const NodePath& path(NodeId u) const { return paths_[u]; }
  Label label(NodeId u) const { return labels_[u]; }
  std::size_t height(NodeId u) const { return paths_[u].size(); }
  NodeId parent(NodeId u) const { return parent_[u]; }
  const std::vector<NodeId>& children(NodeId u) const { return children_[u]; }
  std::optional<NodeId> find(const NodePath& p) const;
  std::size_t max_height() const;

  bool operator==(const LabeledTree& o) const { return paths_ == o.paths_ && labels_ == o.labels_; }

private:
  std::vector<NodePath> paths_;
  std::vector<Label> labels_;
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
};

// image[u] is the target node for source node u.
struct TreeMorphism {
  std::vector<LabeledTree::NodeId> image;
  bool operator==(const TreeMorphism&) const = default;
};

bool embeds(const LabeledTree& t1, const LabeledTree& t2, const QuasiOrder& q);
std::optional<TreeMorphism> find_embedding(const LabeledTree& t1, const LabeledTree& t2,
                                           const QuasiOrder& q);

// Checks height preservation, order preservation and labels directly.
bool is_valid_morphism(const TreeMorphism& m, const LabeledTree& t1, const LabeledTree& t2,
                       const QuasiOrder& q);

// Ordered pairs (i, j), i != j, with family[i] embedding into family[j].
std::vector<std::pair<std::size_t, std::size_t>> antichain_pairs(
    const std::vector<LabeledTree>& family, const QuasiOrder& q);

} // namespace rigidlab
