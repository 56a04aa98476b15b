#pragma once

#include "rigidlab/labeled_tree.hpp"
#include "rigidlab/ordinal.hpp"
#include "rigidlab/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace rigidlab {

// Sparse exact-rational vector over a group's atom indices; zeros are never stored.
class GroupElement {
public:
  GroupElement() = default;
  static GroupElement atom(std::size_t index, const Rational& c = 1);

  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  Rational coefficient(std::size_t index) const;
  void set(std::size_t index, const Rational& c);
  void add(std::size_t index, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  std::vector<std::size_t> support() const;
  // lcm of coefficient denominators
  Integer denominator() const;

  GroupElement& operator+=(const GroupElement& o);
  GroupElement& operator-=(const GroupElement& o);
  GroupElement& operator*=(const Rational& c);
  GroupElement& operator/=(const Rational& c);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator*(GroupElement a, const Rational& c) { return a *= c; }
  friend GroupElement operator*(const Rational& c, GroupElement a) { return a *= c; }
  friend GroupElement operator/(GroupElement a, const Rational& c) { return a /= c; }
  GroupElement operator-() const { return *this * Rational(-1); }
  bool operator==(const GroupElement&) const = default;

private:
  std::map<std::size_t, Rational> terms_;
};

// Prime assignment for the index families p(n, m, j) and q(n, m, label, j).
// Only the shapes that occur are assigned: p(n,0,0), p(n,m,0), p(n,m,1),
// q(n,0,l,0), q(n,m,l,1) with m >= 1.
class PrimeTable {
public:
  using PKey = std::tuple<std::size_t, std::size_t, int>;
  using QKey = std::tuple<std::size_t, std::size_t, Label, int>;

  // Consecutive primes from 2 along the diagonal orders (n+m, n, m, j) for p,
  // then (n+m+l, n, m, l, j) for q.
  static PrimeTable standard(std::size_t level_bound, std::size_t length_bound,
                             std::size_t label_bound);
  // Throws InputError unless all primes are distinct primes.
  static PrimeTable from_maps(std::size_t level_bound, std::size_t length_bound,
                              std::size_t label_bound, std::map<PKey, Prime> p,
                              std::map<QKey, Prime> q);

  // Throw CapacityError outside the bounds.
  Prime p(std::size_t n, std::size_t m, int j) const;
  Prime q(std::size_t n, std::size_t m, Label label, int j) const;

  std::size_t level_bound() const { return level_bound_; }
  std::size_t length_bound() const { return length_bound_; }
  std::size_t label_bound() const { return label_bound_; }
  const std::map<PKey, Prime>& p_map() const { return p_; }
  const std::map<QKey, Prime>& q_map() const { return q_; }

  bool operator==(const PrimeTable&) const = default;

private:
  std::size_t level_bound_ = 0;
  std::size_t length_bound_ = 0;
  std::size_t label_bound_ = 0;
  std::map<PKey, Prime> p_;
  std::map<QKey, Prime> q_;
};

enum class AtomKind : std::uint8_t { Root = 0, A = 1, B = 2 };

// Canonical order: level, kind, alpha, then z or eta.
struct Atom {
  std::size_t level = 0;
  AtomKind kind = AtomKind::Root;
  Ordinal alpha{};
  ZSequence z;
  NodePath eta;

  auto operator<=>(const Atom&) const = default;
};

std::string describe(const Atom& a);

enum class FamilyKind : std::uint8_t {
  Single,    // 1/p(n,m,0)^k times single atoms
  Chain,     // 1/p(n,m,1)^k (a_z + a_{z|m-1})
  TreeRoot,  // 1/q(n,0,l0,0)^k times level-n atoms
  TreeChain  // 1/q(n,m,l,1)^k (b_eta + b_{eta|m-1})
};

struct Family {
  Prime prime = 0;
  FamilyKind kind = FamilyKind::Single;
  std::size_t level = 0;
  std::size_t length = 0;
  Label label = 0;
  std::vector<GroupElement> vectors;
};

// Q-span of a prime's designated vectors, reduced for local questions at that prime.
class LocalLattice {
public:
  LocalLattice(Prime p, std::vector<GroupElement> vectors);

  Prime prime() const { return p_; }
  const std::vector<GroupElement>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& support() const { return support_; }
  bool on_support(std::size_t index) const { return pos_.count(index) != 0; }
  // True when the span is exactly the coordinate subspace on the support.
  bool coordinate() const { return coordinate_; }
  // Rows annihilating exactly the span, restricted to the support.
  const std::vector<GroupElement>& kernel_rows() const { return kernel_rows_; }

  bool in_span(const GroupElement& x) const;
  // x lies in Z_(p)^d + span
  bool contains_locally(const GroupElement& x) const;
  // u in the span with p-power denominators and x - u integral at p.
  GroupElement localized_part(const GroupElement& x) const;

private:
  std::vector<Rational> reduce(const GroupElement& x) const;

  Prime p_;
  std::vector<GroupElement> vectors_;
  std::vector<std::size_t> support_;
  std::unordered_map<std::size_t, std::size_t> pos_;
  bool coordinate_ = true;
  std::vector<std::vector<Rational>> transform_;  // unimodular over Z_(p)
  std::vector<std::vector<Rational>> reduced_;    // transform * vectors
  std::vector<std::size_t> pivot_col_;
  std::vector<GroupElement> kernel_rows_;
};

struct Decomposition {
  GroupElement remainder;
  std::map<Prime, GroupElement> parts;
};

class TruncatedGroup {
public:
  const BlockLayout& layout() const { return layout_; }
  const std::optional<LabeledTree>& tree() const { return tree_; }
  const PrimeTable& primes() const { return primes_; }
  // Present for groups whose level-1 indexing is confined to a subset of offsets.
  const std::optional<std::vector<std::size_t>>& level1_subset() const { return level1_subset_; }

  std::size_t rank() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }
  std::optional<std::size_t> find(const Atom& a) const;
  std::size_t levels() const { return layout_.blocks() + 1; }
  // Atom indices of one level, canonical order.
  const std::vector<std::size_t>& level_atoms(std::size_t n) const { return by_level_[n]; }

  // g_n(h_n(w)); empty for terminal atoms.
  const std::vector<Ordinal>& alias_set(std::size_t atom) const { return alias_sets_[atom]; }
  std::optional<std::size_t> slot(std::size_t atom) const { return slots_[atom]; }
  std::optional<std::size_t> alias(Ordinal alpha) const;
  // Y_n, ascending.
  const std::vector<Ordinal>& y(std::size_t n) const { return y_[n]; }

  const std::vector<Family>& families() const { return families_; }
  const Family* family(Prime p) const;
  const LocalLattice* lattice(Prime p) const;

  void check_element(const GroupElement& x) const;

private:
  friend class GroupAssembler;
  TruncatedGroup(BlockLayout layout, PrimeTable primes)
      : layout_(std::move(layout)), primes_(std::move(primes)) {}

  BlockLayout layout_;
  std::optional<LabeledTree> tree_;
  PrimeTable primes_;
  std::optional<std::vector<std::size_t>> level1_subset_;
  std::vector<Atom> atoms_;
  std::map<Atom, std::size_t> index_;
  std::vector<std::vector<std::size_t>> by_level_;
  std::vector<std::vector<Ordinal>> alias_sets_;
  std::vector<std::optional<std::size_t>> slots_;
  std::map<Ordinal, std::size_t> alias_;
  std::vector<std::vector<Ordinal>> y_;
  std::vector<Family> families_;
  std::map<Prime, std::size_t> family_of_;
  std::vector<LocalLattice> lattices_;
};

// Smallest PrimeTable able to serve a build with this layout and tree.
PrimeTable primes_for(const BlockLayout& layout, const std::optional<LabeledTree>& tree);

TruncatedGroup build_group(const BlockLayout& layout, const std::optional<LabeledTree>& tree,
                           const PrimeTable& primes);
// Level-1 indexing confined to the given offsets (sorted, safe region met).
TruncatedGroup build_group_on_subset(const BlockLayout& layout, const PrimeTable& primes,
                                     std::vector<std::size_t> level1_offsets);

bool contains(const TruncatedGroup& g, const GroupElement& x);
// Throws InputError when x is not in g.
bool divides_pinf(const TruncatedGroup& g, Prime p, const GroupElement& x);
Decomposition decompose(const TruncatedGroup& g, const GroupElement& x);

} // namespace rigidlab
