#pragma once

#include "rigidlab/group.hpp"
#include "rigidlab/labeled_tree.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rigidlab {

// Linear map between atom bases, stored by the image of each source atom.
struct LinearMap {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::vector<GroupElement> columns;

  static LinearMap identity(std::size_t rank);
  static LinearMap zero(std::size_t source_rank, std::size_t target_rank);
  GroupElement apply(const GroupElement& x) const;
  bool is_zero() const;
  LinearMap& operator+=(const LinearMap& o);
  LinearMap& operator*=(const Rational& c);
  bool operator==(const LinearMap&) const = default;
};

struct HomSpace {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::size_t unknowns = 0;
  std::size_t constraints = 0;
  std::size_t equations_rank = 0;
  // Each basis map has integer entries with gcd 1, first nonzero entry positive.
  std::vector<LinearMap> basis;

  std::size_t dimension() const { return basis.size(); }
};

// Throws InputError unless both groups use the same prime table.
HomSpace hom_space(const TruncatedGroup& a, const TruncatedGroup& b);

// Direct check: every atom image lies in b and every designated vector of a
// is sent to something divisible by all powers of its prime in b.
bool is_homomorphism(const LinearMap& f, const TruncatedGroup& a, const TruncatedGroup& b);

// Whether f is a rational combination of the space's basis.
bool in_span(const HomSpace& space, const LinearMap& f);

struct AutomorphismReport {
  bool identity_in_space = false;
  std::size_t endo_dimension = 0;
  // Finite part of the scalar automorphisms.
  std::vector<Rational> scalars;
  // Primes p with (1/p)A = A; each makes the scalar set infinite.
  std::vector<Prime> unit_primes;
};

AutomorphismReport classify_automorphisms(const TruncatedGroup& g, const HomSpace& endo);

struct Extraction {
  TreeMorphism theta;
  std::size_t level = 0;
  std::size_t source_root = 0;  // atom index in a
  std::size_t target_root = 0;  // atom index in b
  Ordinal alpha{};
  std::vector<Ordinal> target_alpha;  // per source node
};

// Throws InputError for h = 0 or groups without trees, ExtractionError when
// every admissible root pair stalls (message names the node).
Extraction extract_tree_map(const LinearMap& h, const TruncatedGroup& a, const TruncatedGroup& b);

// Root pairs (w, w') at a non-terminal level with a nonzero coefficient of w' in h(w).
bool has_root_coefficient(const LinearMap& h, const TruncatedGroup& a, const TruncatedGroup& b);

// Groups on the given level-1 offset subsets, sharing one prime table.
std::vector<TruncatedGroup> build_h_family(const BlockLayout& layout,
                                           const std::vector<std::vector<std::size_t>>& subsets);

struct Distinction {
  Ordinal alpha{};
  bool truth_i = false;
  bool truth_j = false;
  bool swapped = false;  // alpha came from S_j - S_i
};

// True iff some level-1 atom x satisfies psi(1, alpha, x).
bool exists_psi_witness(const TruncatedGroup& g, Ordinal alpha);

Distinction distinguishing_sentence(std::size_t i, std::size_t j,
                                    const std::vector<TruncatedGroup>& family);

} // namespace rigidlab
