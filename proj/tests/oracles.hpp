#pragma once

// Independent reference implementations used only by tests. None of these
// call the library routine they are checking.

#include "rigidlab/abelian.hpp"
#include "rigidlab/group.hpp"
#include "rigidlab/labeled_tree.hpp"
#include "rigidlab/partition_search.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using namespace rigidlab;

// ---- trees ------------------------------------------------------------------------

inline bool is_prefix(const NodePath& a, const NodePath& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Height, label and ancestor preservation, checked over all node pairs.
inline bool morphism_ok(const std::vector<std::size_t>& image, const LabeledTree& t1,
                        const LabeledTree& t2, const QuasiOrder& q) {
  if (image.size() != t1.size()) return false;
  for (std::size_t u = 0; u < t1.size(); ++u) {
    if (image[u] >= t2.size()) return false;
    if (t1.path(u).size() != t2.path(image[u]).size()) return false;
    if (!q.leq(t1.label(u), t2.label(image[u]))) return false;
    for (std::size_t v = 0; v < t1.size(); ++v)
      if (is_prefix(t1.path(u), t1.path(v)) && !is_prefix(t2.path(image[u]), t2.path(image[v])))
        return false;
  }
  return true;
}

inline bool labels_equal(const std::vector<std::size_t>& image, const LabeledTree& t1,
                         const LabeledTree& t2) {
  for (std::size_t u = 0; u < t1.size(); ++u)
    if (t1.label(u) != t2.label(image[u])) return false;
  return true;
}

// Every height-preserving node map, enumerated in full; a branch is cut only
// once its assigned part already breaks the morphism conditions.
inline bool tree_map_exists(const LabeledTree& t1, const LabeledTree& t2, const QuasiOrder& q) {
  std::vector<std::vector<std::size_t>> by_height(16);
  for (std::size_t v = 0; v < t2.size(); ++v) by_height[t2.path(v).size()].push_back(v);
  std::vector<std::size_t> image(t1.size());
  auto partial_ok = [&](std::size_t k) {
    std::size_t u = k;
    if (!q.leq(t1.label(u), t2.label(image[u]))) return false;
    for (std::size_t v = 0; v < k; ++v) {
      if (is_prefix(t1.path(v), t1.path(u)) && !is_prefix(t2.path(image[v]), t2.path(image[u])))
        return false;
      if (is_prefix(t1.path(u), t1.path(v)) && !is_prefix(t2.path(image[u]), t2.path(image[v])))
        return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == t1.size()) return true;
    std::size_t h = t1.path(k).size();
    if (h >= by_height.size()) return false;
    for (auto v : by_height[h]) {
      image[k] = v;
      if (partial_ok(k) && self(self, k + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

inline LabeledTree random_tree(std::mt19937_64& rng, std::size_t nodes, std::size_t labels) {
  std::vector<NodePath> paths{{}};
  std::vector<std::size_t> child_count{0};
  std::uniform_int_distribution<std::size_t> lab(0, labels - 1);
  while (paths.size() < nodes) {
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    std::size_t p = pick(rng);
    NodePath c = paths[p];
    c.push_back(static_cast<std::uint32_t>(child_count[p]++));
    paths.push_back(c);
    child_count.push_back(0);
  }
  std::vector<std::pair<NodePath, Label>> out;
  for (auto& p : paths) out.emplace_back(p, static_cast<Label>(lab(rng)));
  return LabeledTree::from_nodes(std::move(out));
}

// All labeled trees with 1..max_nodes nodes, one per isomorphism class.
inline std::vector<LabeledTree> all_trees(std::size_t max_nodes, std::size_t labels) {
  // canonical code of a subtree: label then sorted child codes
  struct Shape {
    std::string code;
    std::vector<std::pair<NodePath, Label>> nodes;
  };
  // forests[n] = multisets of subtrees with n nodes in total, as sorted code lists
  std::map<std::size_t, std::vector<Shape>> trees;  // by size
  auto graft = [](const Shape& s, std::uint32_t index) {
    std::vector<std::pair<NodePath, Label>> out;
    for (auto& [p, l] : s.nodes) {
      NodePath q{index};
      q.insert(q.end(), p.begin(), p.end());
      out.emplace_back(q, l);
    }
    return out;
  };
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    // children multisets: nondecreasing sequences of (size, index) with sizes summing to n-1
    std::vector<Shape> made;
    std::vector<std::pair<std::size_t, std::size_t>> pick;
    auto rec = [&](auto&& self, std::size_t left) -> void {
      if (left == 0) {
        for (std::size_t l = 0; l < labels; ++l) {
          Shape s;
          s.code = "(" + std::to_string(l);
          s.nodes.emplace_back(NodePath{}, static_cast<Label>(l));
          std::uint32_t idx = 0;
          for (auto [sz, i] : pick) {
            const Shape& c = trees[sz][i];
            s.code += c.code;
            auto g = graft(c, idx++);
            s.nodes.insert(s.nodes.end(), g.begin(), g.end());
          }
          s.code += ")";
          made.push_back(std::move(s));
        }
        return;
      }
      for (std::size_t sz = 1; sz <= left; ++sz)
        for (std::size_t i = 0; i < trees[sz].size(); ++i) {
          if (!pick.empty() && std::make_pair(sz, i) < pick.back()) continue;
          pick.emplace_back(sz, i);
          self(self, left - sz);
          pick.pop_back();
        }
    };
    rec(rec, n - 1);
    trees[n] = std::move(made);
  }
  std::vector<LabeledTree> out;
  for (auto& [n, list] : trees)
    for (auto& s : list) out.push_back(LabeledTree::from_nodes(s.nodes));
  return out;
}

// ---- partition search ---------------------------------------------------------------

inline bool shift_condition(const ColoringTable& f, const std::vector<std::size_t>& seq) {
  for (std::size_t n = 1; n < seq.size(); ++n) {
    Subset a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) a |= Subset{1} << seq[i];
    for (std::size_t i = 1; i <= n; ++i) b |= Subset{1} << seq[i];
    if (f.color(a) != f.color(b)) return false;
  }
  return true;
}

// Lexicographically first injective sequence of the given length, by full enumeration.
inline std::optional<std::vector<std::size_t>> brute_shift_search(const ColoringTable& f,
                                                                  std::size_t len) {
  std::size_t k = f.ground_size();
  if (len > k) return std::nullopt;
  std::vector<std::size_t> seq(len, 0);
  while (true) {
    std::set<std::size_t> distinct(seq.begin(), seq.end());
    if (distinct.size() == len && shift_condition(f, seq)) return seq;
    std::size_t i = len;
    while (i > 0 && ++seq[i - 1] == k) seq[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

// ---- finite abelian groups ------------------------------------------------------------

inline std::uint64_t max_exponent(const std::vector<std::uint64_t>& orders, std::uint64_t p) {
  std::uint64_t best = 0;
  for (auto d : orders) {
    std::uint64_t e = 0;
    while (d % p == 0) d /= p, ++e;
    best = std::max(best, e);
  }
  return best;
}

// Sorted primary components: the isomorphism invariant of a finite abelian group.
inline std::vector<std::uint64_t> primary_components(const std::vector<std::uint64_t>& orders) {
  std::vector<std::uint64_t> out;
  for (auto d : orders) {
    for (std::uint64_t p = 2; d > 1; ++p) {
      std::uint64_t pe = 1;
      while (d % p == 0) d /= p, pe *= p;
      if (pe > 1) out.push_back(pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every presentation (nondecreasing cyclic orders >= 2) with product <= bound.
inline std::vector<std::vector<std::uint64_t>> presentations(std::uint64_t bound) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  auto rec = [&](auto&& self, std::uint64_t prod, std::uint64_t lo) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (std::uint64_t d = lo; prod * d <= bound; ++d) {
      cur.push_back(d);
      self(self, prod * d, d);
      cur.pop_back();
    }
  };
  rec(rec, 1, 2);
  return out;
}

// ---- lattices -------------------------------------------------------------------------

// Row-style echelon basis of an integer lattice; membership by reduction.
class IntegerLattice {
public:
  explicit IntegerLattice(std::size_t dim) : dim_(dim) {}

  void add(std::vector<Integer> v) {
    for (auto& row : basis_) {
      std::size_t c = lead(row);
      if (v[c] == 0) continue;
      // gcd step between row and v on column c
      Integer a = row[c], b = v[c];
      while (b != 0) {
        Integer qt = a / b;
        for (std::size_t i = 0; i < dim_; ++i) row[i] -= qt * v[i];
        std::swap(row, v);
        a = row[c];
        b = v[c];
      }
      if (row[c] < 0)
        for (auto& e : row) e = -e;
    }
    std::size_t c = lead(v);
    if (c == dim_) return;
    if (v[c] < 0)
      for (auto& e : v) e = -e;
    basis_.push_back(std::move(v));
    std::sort(basis_.begin(), basis_.end(),
              [&](const auto& x, const auto& y) { return lead(x) < lead(y); });
  }

  bool contains(std::vector<Integer> v) const {
    for (auto& row : basis_) {
      std::size_t c = lead(row);
      if (v[c] == 0) continue;
      if (v[c] % row[c] != 0) return false;
      Integer qt = v[c] / row[c];
      for (std::size_t i = 0; i < dim_; ++i) v[i] -= qt * row[i];
    }
    for (auto& e : v)
      if (e != 0) return false;
    return true;
  }

private:
  std::size_t lead(const std::vector<Integer>& v) const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (v[i] != 0) return i;
    return dim_;
  }
  std::size_t dim_;
  std::vector<std::vector<Integer>> basis_;
};

// The subgroup generated by the atoms and every designated vector divided by
// p^k, k <= max_power, scaled by the common denominator into Z^rank.
class GeneratorOracle {
public:
  GeneratorOracle(const TruncatedGroup& g, std::size_t max_power)
      : rank_(g.rank()), scale_(1), lattice_(g.rank()) {
    for (auto& f : g.families()) {
      Integer pk = 1;
      for (std::size_t k = 0; k < max_power; ++k) pk *= f.prime;
      scale_ *= pk;
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      std::vector<Integer> v(rank_, 0);
      v[i] = scale_;
      lattice_.add(v);
    }
    for (auto& f : g.families()) {
      Integer pk = 1;
      for (std::size_t k = 0; k < max_power; ++k) pk *= f.prime;
      for (auto& vec : f.vectors) {
        std::vector<Integer> v(rank_, 0);
        for (auto& [i, c] : vec.terms()) {
          Rational s = c * Rational(scale_) / Rational(pk);
          v[i] = s.get_num();
        }
        lattice_.add(v);
      }
    }
  }

  // nullopt when x needs a denominator the oracle does not cover
  std::optional<bool> contains(const GroupElement& x) const {
    std::vector<Integer> v(rank_, 0);
    for (auto& [i, c] : x.terms()) {
      Rational s = c * Rational(scale_);
      if (s.get_den() != 1) return std::nullopt;
      v[i] = s.get_num();
    }
    return lattice_.contains(v);
  }

private:
  std::size_t rank_;
  Integer scale_;
  IntegerLattice lattice_;
};

// ---- ordinals -------------------------------------------------------------------------

// Decreasing sequences from alpha through the sample, by subset enumeration.
inline std::set<ZSequence> z_sequences_by_subsets(Ordinal alpha,
                                                  const std::vector<Ordinal>& sample,
                                                  std::size_t max_len) {
  std::set<ZSequence> out;
  std::size_t m = sample.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ZSequence z{alpha};
    for (std::size_t i = m; i-- > 0;)
      if (mask >> i & 1) z.push_back(sample[i]);
    if (max_len == 0 || z.size() <= max_len) out.insert(z);
  }
  return out;
}

} // namespace oracle
