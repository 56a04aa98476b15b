#include "rigidlab/rigidity.hpp"

#include "rigidlab/errors.hpp"
#include "rigidlab/formula.hpp"
#include "rigidlab/sparse_solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rigidlab {

// ---- LinearMap ---------------------------------------------------------------

LinearMap LinearMap::identity(std::size_t rank) {
  LinearMap m = zero(rank, rank);
  for (std::size_t j = 0; j < rank; ++j) m.columns[j] = GroupElement::atom(j);
  return m;
}

LinearMap LinearMap::zero(std::size_t source_rank, std::size_t target_rank) {
  LinearMap m;
  m.source_rank = source_rank;
  m.target_rank = target_rank;
  m.columns.assign(source_rank, GroupElement{});
  return m;
}

GroupElement LinearMap::apply(const GroupElement& x) const {
  GroupElement out;
  for (auto& [j, c] : x.terms()) {
    if (j >= source_rank) throw InputError("map applied to an element outside its source");
    out += columns[j] * c;
  }
  return out;
}

bool LinearMap::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](auto& c) { return c.is_zero(); });
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
  if (o.source_rank != source_rank || o.target_rank != target_rank)
    throw InputError("adding maps of different shapes");
  for (std::size_t j = 0; j < source_rank; ++j) columns[j] += o.columns[j];
  return *this;
}

LinearMap& LinearMap::operator*=(const Rational& c) {
  for (auto& col : columns) col *= c;
  return *this;
}

// ---- hom_space -----------------------------------------------------------------

namespace {

using Mask = std::vector<char>;

class MaskCache {
public:
  explicit MaskCache(const TruncatedGroup& b) : b_(b) {}
  const Mask& of(Prime p) {
    auto it = masks_.find(p);
    if (it != masks_.end()) return it->second;
    Mask m(b_.rank(), 0);
    if (const LocalLattice* lat = b_.lattice(p))
      for (auto i : lat->support()) m[i] = 1;
    return masks_.emplace(p, std::move(m)).first->second;
  }

private:
  const TruncatedGroup& b_;
  std::map<Prime, Mask> masks_;
};

std::vector<Mask> allowed_supports(const TruncatedGroup& a, const TruncatedGroup& b,
                                   MaskCache& masks) {
  std::vector<Mask> allowed(a.rank(), Mask(b.rank(), 1));
  for (auto& f : a.families()) {
    const Mask& m = masks.of(f.prime);
    for (auto& v : f.vectors) {
      if (v.terms().size() != 1) continue;
      auto j = v.terms().begin()->first;
      for (std::size_t i = 0; i < b.rank(); ++i) allowed[j][i] &= m[i];
    }
  }
  // a coordinate outside the target span can only be reached if another
  // atom of the same vector may cancel it
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& f : a.families()) {
      const Mask& m = masks.of(f.prime);
      for (auto& v : f.vectors) {
        if (v.terms().size() < 2) continue;
        auto supp = v.support();
        for (auto j : supp)
          for (std::size_t i = 0; i < b.rank(); ++i) {
            if (!allowed[j][i] || m[i]) continue;
            bool partner = std::any_of(supp.begin(), supp.end(),
                                       [&](auto k) { return k != j && allowed[k][i]; });
            if (!partner) {
              allowed[j][i] = 0;
              changed = true;
            }
          }
      }
    }
  }
  return allowed;
}

LinearMap to_map(const SparseRow& v, const std::vector<std::pair<std::size_t, std::size_t>>& where,
                 std::size_t da, std::size_t db) {
  Integer den = 1, num = 0;
  for (auto& [k, c] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (auto& [k, c] : v) {
    Integer n = Integer(c.get_num()) * (den / Integer(c.get_den()));
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den, num);
  if (!v.empty() && v.begin()->second < 0) scale = -scale;
  LinearMap m = LinearMap::zero(da, db);
  for (auto& [k, c] : v) {
    auto [j, i] = where[k];
    m.columns[j].set(i, c * scale);
  }
  return m;
}

} // namespace

HomSpace hom_space(const TruncatedGroup& a, const TruncatedGroup& b) {
  if (!(a.primes() == b.primes())) throw InputError("hom space needs groups built from one prime table");
  const std::size_t da = a.rank(), db = b.rank();
  MaskCache masks(b);
  auto allowed = allowed_supports(a, b, masks);

  std::vector<std::vector<long>> var(da, std::vector<long>(db, -1));
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t i = 0; i < db; ++i)
      if (allowed[j][i]) {
        var[j][i] = static_cast<long>(where.size());
        where.emplace_back(j, i);
      }

  HomSpace out;
  out.source_rank = da;
  out.target_rank = db;
  out.unknowns = where.size();
  SparseSolver solver(where.size());
  auto submit = [&](SparseRow row) {
    if (row.empty()) return;
    ++out.constraints;
    solver.add(std::move(row));
  };

  for (auto& f : a.families()) {
    const Mask& m = masks.of(f.prime);
    const LocalLattice* lat = b.lattice(f.prime);
    for (auto& v : f.vectors) {
      std::set<std::size_t> reach;
      for (auto& [j, c] : v.terms())
        for (std::size_t i = 0; i < db; ++i)
          if (allowed[j][i] && !m[i]) reach.insert(i);
      for (auto i : reach) {
        SparseRow row;
        for (auto& [j, c] : v.terms())
          if (var[j][i] >= 0) row[static_cast<std::size_t>(var[j][i])] += c;
        submit(std::move(row));
      }
      if (lat == nullptr || lat->coordinate()) continue;
      for (auto& kappa : lat->kernel_rows()) {
        SparseRow row;
        for (auto& [i, k] : kappa.terms())
          for (auto& [j, c] : v.terms())
            if (var[j][i] >= 0) {
              auto& cell = row[static_cast<std::size_t>(var[j][i])];
              cell += k * c;
            }
        for (auto it = row.begin(); it != row.end();)
          it = it->second == 0 ? row.erase(it) : std::next(it);
        submit(std::move(row));
      }
    }
  }
  out.equations_rank = solver.rank();
  for (auto& v : solver.nullspace()) out.basis.push_back(to_map(v, where, da, db));
  return out;
}

bool is_homomorphism(const LinearMap& f, const TruncatedGroup& a, const TruncatedGroup& b) {
  if (f.source_rank != a.rank() || f.target_rank != b.rank()) return false;
  for (auto& col : f.columns)
    if (!contains(b, col)) return false;
  for (auto& fam : a.families()) {
    const LocalLattice* lat = b.lattice(fam.prime);
    for (auto& v : fam.vectors) {
      GroupElement w = f.apply(v);
      if (w.is_zero()) continue;
      if (lat == nullptr || !lat->in_span(w)) return false;
    }
  }
  return true;
}

bool in_span(const HomSpace& space, const LinearMap& f) {
  const std::size_t db = space.target_rank;
  auto flatten = [&](const LinearMap& m) {
    SparseRow row;
    for (std::size_t j = 0; j < m.columns.size(); ++j)
      for (auto& [i, c] : m.columns[j].terms()) row[j * db + i] = c;
    return row;
  };
  if (f.source_rank != space.source_rank || f.target_rank != space.target_rank) return false;
  SparseSolver rows(space.source_rank * db);
  for (auto& m : space.basis) rows.add(flatten(m));
  return rows.reduce(flatten(f)).empty();
}

AutomorphismReport classify_automorphisms(const TruncatedGroup& g, const HomSpace& endo) {
  AutomorphismReport r;
  r.endo_dimension = endo.dimension();
  r.identity_in_space = in_span(endo, LinearMap::identity(g.rank()));
  if (r.identity_in_space) {
    // -1 always keeps A; any other scalar needs 1/p A = A for its primes
    for (std::size_t j = 0; j < g.rank(); ++j)
      if (!contains(g, GroupElement::atom(j, -1)))
        throw std::logic_error("negation left the group");
    r.scalars = {Rational(-1), Rational(1)};
    for (auto& f : g.families()) {
      bool unit = true;
      for (std::size_t j = 0; j < g.rank() && unit; ++j)
        unit = contains(g, GroupElement::atom(j, Rational(1, static_cast<unsigned long>(f.prime))));
      if (unit) r.unit_primes.push_back(f.prime);
    }
    std::sort(r.unit_primes.begin(), r.unit_primes.end());
  }
  return r;
}

// ---- extraction ------------------------------------------------------------------

namespace {

std::string path_text(const NodePath& p) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ">";
  return os.str();
}

struct Attempt {
  std::optional<Extraction> result;
  std::string failure;
};

Attempt try_pair(const LinearMap& h, const TruncatedGroup& a, const TruncatedGroup& b,
                 std::size_t n, std::size_t w, std::size_t w2) {
  const LabeledTree& ta = *a.tree();
  const LabeledTree& tb = *b.tree();
  Extraction ex;
  ex.level = n;
  ex.source_root = w;
  ex.target_root = w2;
  ex.theta.image.assign(ta.size(), 0);
  ex.target_alpha.assign(ta.size(), Ordinal{});
  // nodes are in lexicographic order, so parents are placed first; choices are
  // tried smallest child first and undone when a later node has none
  LabeledTree::NodeId deepest = 0;
  auto place = [&](auto&& self, LabeledTree::NodeId u) -> bool {
    if (u == ta.size()) return true;
    deepest = std::max(deepest, u);
    auto par = ta.parent(u);
    std::vector<Ordinal> choices =
        par == ta.root() ? b.alias_set(w2) : std::vector<Ordinal>{ex.target_alpha[par]};
    auto src = a.find(Atom{n + 1, AtomKind::B, ex.alpha, {}, ta.path(u)});
    if (!src) return false;
    const GroupElement& col = h.columns[*src];
    for (auto c : tb.children(ex.theta.image[par])) {
      if (tb.label(c) != ta.label(u)) continue;
      for (Ordinal alpha2 : choices) {
        auto tgt = b.find(Atom{n + 1, AtomKind::B, alpha2, {}, tb.path(c)});
        if (!tgt || col.coefficient(*tgt) == 0) continue;
        ex.theta.image[u] = c;
        ex.target_alpha[u] = alpha2;
        if (self(self, u + 1)) return true;
      }
    }
    return false;
  };
  for (Ordinal alpha : a.alias_set(w)) {
    ex.alpha = alpha;
    if (place(place, 1)) return {std::move(ex), {}};
  }
  std::ostringstream os;
  os << "extraction stalls at node " << path_text(ta.path(deepest)) << " (root pair "
     << describe(a.atom(w)) << " -> " << describe(b.atom(w2)) << ", label " << ta.label(deepest)
     << ")";
  return {std::nullopt, os.str()};
}

template <class Visit>
void for_each_root_pair(const LinearMap& h, const TruncatedGroup& a, const TruncatedGroup& b,
                        Visit visit) {
  const std::size_t top = a.layout().blocks();
  for (std::size_t n = 0; n < top; ++n)
    for (auto w : a.level_atoms(n)) {
      if (a.alias_set(w).empty()) continue;
      for (auto& [w2, c] : h.columns[w].terms()) {
        if (b.atom(w2).level != n || b.alias_set(w2).empty()) continue;
        if (visit(n, w, w2)) return;
      }
    }
}

} // namespace

bool has_root_coefficient(const LinearMap& h, const TruncatedGroup& a, const TruncatedGroup& b) {
  bool found = false;
  for_each_root_pair(h, a, b, [&](auto, auto, auto) { return found = true; });
  return found;
}

Extraction extract_tree_map(const LinearMap& h, const TruncatedGroup& a, const TruncatedGroup& b) {
  if (!a.tree() || !b.tree()) throw InputError("extraction needs groups built over trees");
  if (h.source_rank != a.rank() || h.target_rank != b.rank())
    throw InputError("map shape does not match the groups");
  if (h.is_zero()) throw InputError("extraction needs a nonzero map");
  if (!(a.layout() == b.layout())) throw InputError("extraction needs a shared layout");
  std::optional<Extraction> found;
  std::string first_failure;
  bool any = false;
  for_each_root_pair(h, a, b, [&](std::size_t n, std::size_t w, std::size_t w2) {
    any = true;
    Attempt at = try_pair(h, a, b, n, w, w2);
    if (at.result) {
      found = std::move(at.result);
      return true;
    }
    if (first_failure.empty()) first_failure = at.failure;
    return false;
  });
  if (!any) throw InputError("no root atom is sent to a combination with a nonzero root coefficient");
  if (!found) throw ExtractionError(first_failure);

  std::set<Label> labels;
  for (LabeledTree::NodeId u = 0; u < a.tree()->size(); ++u) labels.insert(a.tree()->label(u));
  for (LabeledTree::NodeId u = 0; u < b.tree()->size(); ++u) labels.insert(b.tree()->label(u));
  auto order = QuasiOrder::equality({labels.begin(), labels.end()});
  if (!is_valid_morphism(found->theta, *a.tree(), *b.tree(), order))
    throw std::logic_error("extracted map failed the morphism checker");
  return *found;
}

// ---- H-family ----------------------------------------------------------------------

std::vector<TruncatedGroup> build_h_family(const BlockLayout& layout,
                                           const std::vector<std::vector<std::size_t>>& subsets) {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    auto s = subsets[i];
    std::sort(s.begin(), s.end());
    if (!seen.insert(s).second) throw InputError("subset " + std::to_string(i) + " repeats another");
    bool safe = std::any_of(s.begin(), s.end(), [&](std::size_t off) {
      return off < layout.block_capacity() && layout.is_safe(Ordinal{1, off});
    });
    if (!safe) throw InputError("subset " + std::to_string(i) + " avoids the safe region");
  }
  PrimeTable primes = primes_for(layout, std::nullopt);
  std::vector<TruncatedGroup> out;
  for (auto& s : subsets) out.push_back(build_group_on_subset(layout, primes, s));
  return out;
}

bool exists_psi_witness(const TruncatedGroup& g, Ordinal alpha) {
  for (auto x : g.level_atoms(1))
    if (eval_psi(g, 1, alpha, GroupElement::atom(x))) return true;
  return false;
}

Distinction distinguishing_sentence(std::size_t i, std::size_t j,
                                    const std::vector<TruncatedGroup>& family) {
  if (i == j) throw InputError("distinguishing needs two different indices");
  if (i >= family.size() || j >= family.size()) throw InputError("index outside the family");
  const auto& si = family[i].level1_subset();
  const auto& sj = family[j].level1_subset();
  if (!si || !sj) throw InputError("family members must be subset builds");
  const BlockLayout& layout = family[i].layout();
  auto pick = [&](const std::vector<std::size_t>& x,
                  const std::vector<std::size_t>& y) -> std::optional<std::size_t> {
    for (auto g : x)
      if (!std::binary_search(y.begin(), y.end(), g) && layout.is_safe(Ordinal{1, g})) return g;
    return std::nullopt;
  };
  Distinction d;
  auto gamma = pick(*si, *sj);
  if (!gamma) {
    gamma = pick(*sj, *si);
    d.swapped = true;
  }
  if (!gamma)
    throw InputError("subsets " + std::to_string(i) + " and " + std::to_string(j) +
                     " have no safe difference");
  d.alpha = Ordinal{1, *gamma};
  d.truth_i = exists_psi_witness(family[i], d.alpha);
  d.truth_j = exists_psi_witness(family[j], d.alpha);
  return d;
}

} // namespace rigidlab
