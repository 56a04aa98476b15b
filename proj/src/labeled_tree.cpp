#include "rigidlab/labeled_tree.hpp"

#include "rigidlab/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rigidlab {

QuasiOrder::QuasiOrder(std::vector<Label> elements,
                       const std::vector<std::pair<Label, Label>>& leq) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw InputError("quasi-order: duplicate element");
  elements_ = std::move(elements);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
  std::size_t n = elements_.size();
  rel_.assign(n, std::vector<bool>(n, false));
  for (auto [a, b] : leq) {
    if (!contains(a) || !contains(b))
      throw InputError("quasi-order: pair mentions label outside elements");
    rel_[index_[a]][index_[b]] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!rel_[i][i])
      throw InputError("quasi-order: not reflexive at " + std::to_string(elements_[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel_[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (rel_[j][k] && !rel_[i][k])
            throw InputError("quasi-order: not transitive at " + std::to_string(elements_[i]) +
                             "," + std::to_string(elements_[j]) + "," +
                             std::to_string(elements_[k]));
}

QuasiOrder QuasiOrder::equality(std::vector<Label> elements) {
  std::vector<std::pair<Label, Label>> pairs;
  for (Label l : elements) pairs.emplace_back(l, l);
  return QuasiOrder(std::move(elements), pairs);
}

QuasiOrder QuasiOrder::chain(std::size_t size) {
  std::vector<Label> elems;
  std::vector<std::pair<Label, Label>> pairs;
  for (Label a = 0; a < size; ++a) {
    elems.push_back(a);
    for (Label b = a; b < size; ++b) pairs.emplace_back(a, b);
  }
  return QuasiOrder(std::move(elems), pairs);
}

std::size_t QuasiOrder::position(Label l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw InputError("label " + std::to_string(l) + " outside quasi-order");
  return it->second;
}

bool QuasiOrder::leq(Label a, Label b) const { return rel_[position(a)][position(b)]; }

std::vector<std::pair<Label, Label>> QuasiOrder::pairs() const {
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = 0; j < elements_.size(); ++j)
      if (rel_[i][j]) out.emplace_back(elements_[i], elements_[j]);
  return out;
}

LabeledTree LabeledTree::from_nodes(std::vector<std::pair<NodePath, Label>> nodes) {
  std::sort(nodes.begin(), nodes.end());
  LabeledTree t;
  std::map<NodePath, NodeId> where;
  for (auto& [p, l] : nodes) {
    if (where.count(p)) throw InputError("tree: duplicate node");
    where[p] = t.paths_.size();
    t.paths_.push_back(p);
    t.labels_.push_back(l);
  }
  if (t.paths_.empty() || !t.paths_[0].empty()) throw InputError("tree: missing root");
  t.parent_.assign(t.size(), 0);
  t.children_.assign(t.size(), {});
  for (NodeId u = 1; u < t.size(); ++u) {
    NodePath up(t.paths_[u].begin(), t.paths_[u].end() - 1);
    auto it = where.find(up);
    if (it == where.end()) throw InputError("tree: node set not prefix closed");
    t.parent_[u] = it->second;
    t.children_[it->second].push_back(u);
  }
  return t;
}

LabeledTree LabeledTree::single(Label root_label) { return from_nodes({{NodePath{}, root_label}}); }

std::optional<LabeledTree::NodeId> LabeledTree::find(const NodePath& p) const {
  auto it = std::lower_bound(paths_.begin(), paths_.end(), p);
  if (it == paths_.end() || *it != p) return std::nullopt;
  return static_cast<NodeId>(it - paths_.begin());
}

std::size_t LabeledTree::max_height() const {
  std::size_t h = 0;
  for (auto& p : paths_) h = std::max(h, p.size());
  return h;
}

namespace {

void check_labels(const LabeledTree& t, const QuasiOrder& q) {
  for (LabeledTree::NodeId u = 0; u < t.size(); ++u)
    if (!q.contains(t.label(u)))
      throw InputError("tree label " + std::to_string(t.label(u)) + " outside quasi-order");
}

// Emb(u, v) over all node pairs; children can only go to children.
class EmbeddingTable {
public:
  EmbeddingTable(const LabeledTree& a, const LabeledTree& b, const QuasiOrder& q)
      : a_(a), b_(b), q_(q), memo_(a.size() * b.size(), -1) {}

  bool emb(LabeledTree::NodeId u, LabeledTree::NodeId v) {
    signed char& m = memo_[u * b_.size() + v];
    if (m >= 0) return m != 0;
    bool ok = q_.leq(a_.label(u), b_.label(v));
    for (auto c : a_.children(u)) {
      if (!ok) break;
      ok = std::any_of(b_.children(v).begin(), b_.children(v).end(),
                       [&](auto c2) { return emb(c, c2); });
    }
    m = ok ? 1 : 0;
    return ok;
  }

private:
  const LabeledTree& a_;
  const LabeledTree& b_;
  const QuasiOrder& q_;
  std::vector<signed char> memo_;
};

} // namespace

bool embeds(const LabeledTree& t1, const LabeledTree& t2, const QuasiOrder& q) {
  check_labels(t1, q);
  check_labels(t2, q);
  return EmbeddingTable(t1, t2, q).emb(t1.root(), t2.root());
}

std::optional<TreeMorphism> find_embedding(const LabeledTree& t1, const LabeledTree& t2,
                                           const QuasiOrder& q) {
  check_labels(t1, q);
  check_labels(t2, q);
  EmbeddingTable table(t1, t2, q);
  if (!table.emb(t1.root(), t2.root())) return std::nullopt;
  TreeMorphism m;
  m.image.assign(t1.size(), 0);
  for (LabeledTree::NodeId u = 1; u < t1.size(); ++u) {
    auto up = m.image[t1.parent(u)];
    // children are stored in path order, so the first hit is the smallest
    for (auto c : t2.children(up))
      if (table.emb(u, c)) {
        m.image[u] = c;
        break;
      }
  }
  if (!is_valid_morphism(m, t1, t2, q))
    throw std::logic_error("find_embedding produced an invalid witness");
  return m;
}

bool is_valid_morphism(const TreeMorphism& m, const LabeledTree& t1, const LabeledTree& t2,
                       const QuasiOrder& q) {
  if (m.image.size() != t1.size()) return false;
  for (LabeledTree::NodeId u = 0; u < t1.size(); ++u) {
    auto v = m.image[u];
    if (v >= t2.size()) return false;
    if (t1.height(u) != t2.height(v)) return false;
    if (!q.leq(t1.label(u), t2.label(v))) return false;
  }
  // order preservation: u below w implies image(u) below image(w)
  for (LabeledTree::NodeId u = 0; u < t1.size(); ++u)
    for (LabeledTree::NodeId w = 0; w < t1.size(); ++w) {
      const auto& pu = t1.path(u);
      const auto& pw = t1.path(w);
      if (pu.size() > pw.size() || !std::equal(pu.begin(), pu.end(), pw.begin())) continue;
      const auto& iu = t2.path(m.image[u]);
      const auto& iw = t2.path(m.image[w]);
      if (iu.size() > iw.size() || !std::equal(iu.begin(), iu.end(), iw.begin())) return false;
    }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> antichain_pairs(
    const std::vector<LabeledTree>& family, const QuasiOrder& q) {
  if (family.empty()) throw InputError("antichain check needs a nonempty family");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (i != j && embeds(family[i], family[j], q)) out.emplace_back(i, j);
  return out;
}

} // namespace rigidlab
