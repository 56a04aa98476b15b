#pragma once

#include "rigidlab/group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rigidlab {

// phi(n, m, beta): u lies in the subgroup generated by the p(n,m,0)-divisible
// level-(n+1) atoms a_z with |z| = m and z(m-1) >= beta. For m = 0 only
// beta = 0 is meaningful and phi is p(n,0,0)-divisibility.
bool eval_phi(const TruncatedGroup& g, std::size_t n, std::size_t m, Ordinal beta,
              const GroupElement& u);

// u is a combination of level-n atoms with nonzero integer coefficients and
// alpha lies in one of their alias sets.
bool eval_psi(const TruncatedGroup& g, std::size_t n, Ordinal alpha, const GroupElement& u);

struct PsiUnfolding {
  bool value = false;
  std::optional<GroupElement> witness;
  std::size_t candidates = 0;
};

// The quantified definition, with the witness y searched over
// sum c_i a_<alpha_i> for alpha_i in the alias set of the i-th atom of u.
PsiUnfolding unfold_psi(const TruncatedGroup& g, std::size_t n, Ordinal alpha,
                        const GroupElement& u);

// Least nu with p^nu A = 0 for A the direct sum of cyclic groups of the given
// orders. Throws InputError unless every order is a power of p.
std::size_t p_length(const std::vector<std::uint64_t>& cyclic_orders, Prime p);

} // namespace rigidlab
