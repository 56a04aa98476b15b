#include "rigidlab/formula.hpp"

#include "rigidlab/errors.hpp"

#include <algorithm>
#include <string>

namespace rigidlab {

namespace {

void require_member(const TruncatedGroup& g, const GroupElement& u) {
  if (!contains(g, u)) throw InputError("element is not in the group");
}

void require_level(const TruncatedGroup& g, std::size_t n, bool needs_next) {
  std::size_t top = g.layout().blocks();
  if (n > top || (needs_next && n >= top))
    throw InputError("level " + std::to_string(n) + " has no formula at this truncation");
}

bool divisible_by(const TruncatedGroup& g, Prime p, const GroupElement& u) {
  if (u.is_zero()) return true;
  const LocalLattice* lat = g.lattice(p);
  return lat != nullptr && lat->in_span(u);
}

} // namespace

bool eval_phi(const TruncatedGroup& g, std::size_t n, std::size_t m, Ordinal beta,
              const GroupElement& u) {
  require_member(g, u);
  if (m == 0) {
    if (beta != Ordinal{}) throw InputError("phi with m = 0 takes beta = 0 only");
    require_level(g, n, false);
    return divisible_by(g, g.primes().p(n, 0, 0), u);
  }
  require_level(g, n, true);
  if (!divisible_by(g, g.primes().p(n, m, 0), u)) return false;
  return std::all_of(u.terms().begin(), u.terms().end(), [&](const auto& t) {
    const Atom& a = g.atom(t.first);
    return a.z.size() == m && a.z[m - 1] >= beta;
  });
}

bool eval_psi(const TruncatedGroup& g, std::size_t n, Ordinal alpha, const GroupElement& u) {
  require_member(g, u);
  require_level(g, n, false);
  if (u.is_zero()) return false;
  bool hit = false;
  for (auto& [i, c] : u.terms()) {
    if (g.atom(i).level != n || !is_integral(c)) return false;
    const auto& s = g.alias_set(i);
    hit = hit || std::binary_search(s.begin(), s.end(), alpha);
  }
  return hit;
}

PsiUnfolding unfold_psi(const TruncatedGroup& g, std::size_t n, Ordinal alpha,
                        const GroupElement& u) {
  require_member(g, u);
  require_level(g, n, true);
  PsiUnfolding out;
  if (!eval_phi(g, n, 0, Ordinal{}, u)) return out;

  std::vector<std::pair<std::size_t, Rational>> terms(u.terms().begin(), u.terms().end());
  std::vector<std::size_t> choice(terms.size(), 0);
  for (auto& [i, c] : terms)
    if (g.alias_set(i).empty()) return out;

  const Prime link = g.primes().p(n, 1, 1);
  const Ordinal next = g.layout().successor(alpha);
  for (;;) {
    GroupElement y;
    bool formed = true;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      Ordinal a = g.alias_set(terms[k].first)[choice[k]];
      auto id = g.find(Atom{n + 1, AtomKind::A, a, ZSequence{a}, {}});
      if (!id) {
        formed = false;
        break;
      }
      y.add(*id, terms[k].second);
    }
    ++out.candidates;
    if (formed && contains(g, y) && divides_pinf(g, link, u + y) && eval_phi(g, n, 1, alpha, y) &&
        !eval_phi(g, n, 1, next, y)) {
      out.value = true;
      out.witness = std::move(y);
      return out;
    }
    // odometer over the alias sets
    std::size_t k = 0;
    for (; k < terms.size(); ++k) {
      if (++choice[k] < g.alias_set(terms[k].first).size()) break;
      choice[k] = 0;
    }
    if (k == terms.size()) return out;
  }
}

std::size_t p_length(const std::vector<std::uint64_t>& cyclic_orders, Prime p) {
  if (p < 2 || !is_prime(p)) throw InputError("p-length needs a prime");
  std::vector<std::uint64_t> orders;
  for (auto d : cyclic_orders) {
    if (d < 1) throw InputError("cyclic order must be positive");
    std::uint64_t r = d;
    while (r % p == 0) r /= p;
    if (r != 1) throw InputError("order " + std::to_string(d) + " is not a power of " +
                                 std::to_string(p));
    orders.push_back(d);
  }
  // multiplication by p maps Z/p^e onto a copy of Z/p^(e-1)
  std::size_t nu = 0;
  while (std::any_of(orders.begin(), orders.end(), [](auto d) { return d > 1; })) {
    for (auto& d : orders)
      if (d > 1) d /= p;
    ++nu;
  }
  return nu;
}

} // namespace rigidlab
