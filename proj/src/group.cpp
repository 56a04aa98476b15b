#include "rigidlab/group.hpp"

#include "rigidlab/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rigidlab {

// ---- GroupElement ----------------------------------------------------------

GroupElement GroupElement::atom(std::size_t index, const Rational& c) {
  GroupElement e;
  e.set(index, c);
  return e;
}

Rational GroupElement::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

// Callers may hand over unreduced fractions such as Rational(3, 6).
void GroupElement::set(std::size_t index, const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v == 0)
    terms_.erase(index);
  else
    terms_[index] = std::move(v);
}

void GroupElement::add(std::size_t index, const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, fresh] = terms_.try_emplace(index, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

bool GroupElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return rigidlab::is_integral(t.second); });
}

std::vector<std::size_t> GroupElement::support() const {
  std::vector<std::size_t> out;
  for (auto& [i, c] : terms_) out.push_back(i);
  return out;
}

Integer GroupElement::denominator() const {
  Integer d = 1;
  for (auto& [i, c] : terms_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  return d;
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
  for (auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) {
  for (auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

GroupElement& GroupElement::operator*=(const Rational& c) {
  Rational k = c;
  k.canonicalize();
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, v] : terms_) v *= k;
  return *this;
}

GroupElement& GroupElement::operator/=(const Rational& c) {
  Rational k = c;
  k.canonicalize();
  if (k == 0) throw InputError("division of a group element by zero");
  for (auto& [i, v] : terms_) v /= k;
  return *this;
}

// ---- PrimeTable --------------------------------------------------------------

namespace {

std::vector<PrimeTable::PKey> p_shapes(std::size_t nb, std::size_t mb) {
  std::vector<PrimeTable::PKey> keys;
  for (std::size_t n = 0; n <= nb; ++n) {
    keys.emplace_back(n, 0, 0);
    for (std::size_t m = 1; m <= mb; ++m) {
      keys.emplace_back(n, m, 0);
      keys.emplace_back(n, m, 1);
    }
  }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    auto [n1, m1, j1] = a;
    auto [n2, m2, j2] = b;
    return std::tuple(n1 + m1, n1, m1, j1) < std::tuple(n2 + m2, n2, m2, j2);
  });
  return keys;
}

std::vector<PrimeTable::QKey> q_shapes(std::size_t nb, std::size_t mb, std::size_t lb) {
  std::vector<PrimeTable::QKey> keys;
  for (std::size_t n = 0; n <= nb; ++n)
    for (Label l = 0; l <= lb; ++l) {
      keys.emplace_back(n, 0, l, 0);
      for (std::size_t m = 1; m <= mb; ++m) keys.emplace_back(n, m, l, 1);
    }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    auto [n1, m1, l1, j1] = a;
    auto [n2, m2, l2, j2] = b;
    return std::tuple(n1 + m1 + l1, n1, m1, l1, j1) < std::tuple(n2 + m2 + l2, n2, m2, l2, j2);
  });
  return keys;
}

} // namespace

PrimeTable PrimeTable::standard(std::size_t level_bound, std::size_t length_bound,
                                std::size_t label_bound) {
  std::map<PKey, Prime> p;
  std::map<QKey, Prime> q;
  Integer cur = 1;
  auto next = [&] {
    mpz_nextprime(cur.get_mpz_t(), cur.get_mpz_t());
    return static_cast<Prime>(cur.get_ui());
  };
  for (auto& k : p_shapes(level_bound, length_bound)) p[k] = next();
  for (auto& k : q_shapes(level_bound, length_bound, label_bound)) q[k] = next();
  return from_maps(level_bound, length_bound, label_bound, std::move(p), std::move(q));
}

PrimeTable PrimeTable::from_maps(std::size_t level_bound, std::size_t length_bound,
                                 std::size_t label_bound, std::map<PKey, Prime> p,
                                 std::map<QKey, Prime> q) {
  std::set<Prime> seen;
  auto admit = [&](Prime v) {
    if (!is_prime(v)) throw InputError("prime table: " + std::to_string(v) + " is not prime");
    if (!seen.insert(v).second)
      throw InputError("prime table: " + std::to_string(v) + " assigned twice");
  };
  for (auto& k : p_shapes(level_bound, length_bound)) {
    auto it = p.find(k);
    if (it == p.end()) throw InputError("prime table: missing p entry");
    admit(it->second);
  }
  for (auto& k : q_shapes(level_bound, length_bound, label_bound)) {
    auto it = q.find(k);
    if (it == q.end()) throw InputError("prime table: missing q entry");
    admit(it->second);
  }
  if (seen.size() != p.size() + q.size()) throw InputError("prime table: entries outside bounds");
  PrimeTable t;
  t.level_bound_ = level_bound;
  t.length_bound_ = length_bound;
  t.label_bound_ = label_bound;
  t.p_ = std::move(p);
  t.q_ = std::move(q);
  return t;
}

Prime PrimeTable::p(std::size_t n, std::size_t m, int j) const {
  auto it = p_.find({n, m, j});
  if (it == p_.end())
    throw CapacityError(n, "no prime p(" + std::to_string(n) + "," + std::to_string(m) + "," +
                               std::to_string(j) + ") in the table");
  return it->second;
}

Prime PrimeTable::q(std::size_t n, std::size_t m, Label label, int j) const {
  auto it = q_.find({n, m, label, j});
  if (it == q_.end())
    throw CapacityError(n, "no prime q(" + std::to_string(n) + "," + std::to_string(m) + "," +
                               std::to_string(label) + "," + std::to_string(j) + ") in the table");
  return it->second;
}

// ---- Atom --------------------------------------------------------------------

std::string describe(const Atom& a) {
  std::ostringstream os;
  auto ord = [&](Ordinal o) { os << o.block << ":" << o.offset; };
  if (a.kind == AtomKind::Root) return "a0";
  os << (a.kind == AtomKind::A ? "a" : "b") << a.level << "[";
  ord(a.alpha);
  os << "|";
  if (a.kind == AtomKind::A) {
    for (std::size_t i = 0; i < a.z.size(); ++i) {
      if (i) os << ",";
      ord(a.z[i]);
    }
  } else {
    for (std::size_t i = 0; i < a.eta.size(); ++i) os << (i ? "," : "") << a.eta[i];
  }
  os << "]";
  return os.str();
}

// ---- LocalLattice ------------------------------------------------------------

LocalLattice::LocalLattice(Prime p, std::vector<GroupElement> vectors)
    : p_(p), vectors_(std::move(vectors)) {
  std::set<std::size_t> supp;
  for (auto& v : vectors_)
    for (auto& [i, c] : v.terms()) supp.insert(i);
  support_.assign(supp.begin(), supp.end());
  for (std::size_t k = 0; k < support_.size(); ++k) pos_[support_[k]] = k;

  std::set<std::size_t> singles;
  for (auto& v : vectors_)
    if (v.terms().size() == 1) singles.insert(v.terms().begin()->first);
  coordinate_ = singles.size() == support_.size();
  if (coordinate_) return;

  const std::size_t s = support_.size();
  const std::size_t r = vectors_.size();
  reduced_.assign(s, std::vector<Rational>(r));
  transform_.assign(s, std::vector<Rational>(s));
  for (std::size_t i = 0; i < s; ++i) transform_[i][i] = 1;
  for (std::size_t j = 0; j < r; ++j)
    for (auto& [i, c] : vectors_[j].terms()) reduced_[pos_[i]][j] = c;

  std::size_t rank = 0;
  for (std::size_t j = 0; j < r && rank < s; ++j) {
    std::size_t best = s;
    int best_v = 0;
    for (std::size_t i = rank; i < s; ++i) {
      if (reduced_[i][j] == 0) continue;
      int v = valuation(reduced_[i][j], p_);
      if (best == s || v < best_v) {
        best = i;
        best_v = v;
      }
    }
    if (best == s) continue;
    std::swap(reduced_[best], reduced_[rank]);
    std::swap(transform_[best], transform_[rank]);
    for (std::size_t i = rank + 1; i < s; ++i) {
      if (reduced_[i][j] == 0) continue;
      Rational f = reduced_[i][j] / reduced_[rank][j];
      for (std::size_t k = j; k < r; ++k)
        if (reduced_[rank][k] != 0) reduced_[i][k] -= f * reduced_[rank][k];
      for (std::size_t k = 0; k < s; ++k)
        if (transform_[rank][k] != 0) transform_[i][k] -= f * transform_[rank][k];
    }
    pivot_col_.push_back(j);
    ++rank;
  }
  for (std::size_t i = rank; i < s; ++i) {
    GroupElement row;
    for (std::size_t k = 0; k < s; ++k) row.set(support_[k], transform_[i][k]);
    kernel_rows_.push_back(std::move(row));
  }
}

std::vector<Rational> LocalLattice::reduce(const GroupElement& x) const {
  const std::size_t s = support_.size();
  std::vector<Rational> y(s);
  for (auto& [i, c] : x.terms()) {
    auto it = pos_.find(i);
    if (it == pos_.end()) continue;
    for (std::size_t row = 0; row < s; ++row)
      if (transform_[row][it->second] != 0) y[row] += transform_[row][it->second] * c;
  }
  return y;
}

bool LocalLattice::in_span(const GroupElement& x) const {
  for (auto& [i, c] : x.terms())
    if (!on_support(i)) return false;
  if (coordinate_) return true;
  auto y = reduce(x);
  for (std::size_t i = pivot_col_.size(); i < y.size(); ++i)
    if (y[i] != 0) return false;
  return true;
}

bool LocalLattice::contains_locally(const GroupElement& x) const {
  for (auto& [i, c] : x.terms())
    if (!on_support(i) && !is_p_integral(c, p_)) return false;
  if (coordinate_) return true;
  auto y = reduce(x);
  for (std::size_t i = pivot_col_.size(); i < y.size(); ++i)
    if (!is_p_integral(y[i], p_)) return false;
  return true;
}

GroupElement LocalLattice::localized_part(const GroupElement& x) const {
  GroupElement u;
  if (coordinate_) {
    for (auto& [i, c] : x.terms())
      if (on_support(i)) u.set(i, p_power_part(c, p_));
    return u;
  }
  auto y = reduce(x);
  const std::size_t rank = pivot_col_.size();
  std::vector<Rational> t(vectors_.size());
  for (std::size_t i = rank; i-- > 0;) {
    Rational acc = y[i];
    for (std::size_t k = i + 1; k < rank; ++k) acc -= reduced_[i][pivot_col_[k]] * t[pivot_col_[k]];
    t[pivot_col_[i]] = acc / reduced_[i][pivot_col_[i]];
  }
  for (std::size_t j = 0; j < t.size(); ++j) {
    Rational part = p_power_part(t[j], p_);
    if (part != 0) u += vectors_[j] * part;
  }
  return u;
}

// ---- TruncatedGroup ----------------------------------------------------------

std::optional<std::size_t> TruncatedGroup::find(const Atom& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TruncatedGroup::alias(Ordinal alpha) const {
  auto it = alias_.find(alpha);
  if (it == alias_.end()) return std::nullopt;
  return it->second;
}

const Family* TruncatedGroup::family(Prime p) const {
  auto it = family_of_.find(p);
  return it == family_of_.end() ? nullptr : &families_[it->second];
}

const LocalLattice* TruncatedGroup::lattice(Prime p) const {
  auto it = family_of_.find(p);
  return it == family_of_.end() ? nullptr : &lattices_[it->second];
}

void TruncatedGroup::check_element(const GroupElement& x) const {
  if (!x.is_zero() && x.terms().rbegin()->first >= rank())
    throw InputError("element mentions atom index " + std::to_string(x.terms().rbegin()->first) +
                     " but the group has rank " + std::to_string(rank()));
}

PrimeTable primes_for(const BlockLayout& layout, const std::optional<LabeledTree>& tree) {
  std::size_t len = layout.z_max_len();
  if (len == 0) len = layout.sample_cap() + 1;
  std::size_t label_bound = 0;
  if (tree) {
    len = std::max(len, tree->max_height());
    for (LabeledTree::NodeId u = 0; u < tree->size(); ++u)
      label_bound = std::max<std::size_t>(label_bound, tree->label(u));
  }
  return PrimeTable::standard(layout.blocks(), len, label_bound);
}

class GroupAssembler {
public:
  // slot_policy: fills alias sets for the atoms of a non-terminal level.
  static TruncatedGroup assemble(const BlockLayout& layout, const std::optional<LabeledTree>& tree,
                                 const PrimeTable& primes,
                                 const std::optional<std::vector<std::size_t>>& level1_subset);

private:
  static void add_level(TruncatedGroup& g, std::size_t n);
  static void assign_slots(TruncatedGroup& g, std::size_t n);
  static void add_families(TruncatedGroup& g);
};

void GroupAssembler::add_level(TruncatedGroup& g, std::size_t n) {
  std::vector<Atom> level;
  if (n == 0) {
    level.push_back(Atom{});
  } else {
    for (Ordinal alpha : g.y_[n - 1])
      for (auto& z : z_sequences(alpha, g.layout_))
        level.push_back(Atom{n, AtomKind::A, alpha, z, {}});
    if (g.tree_)
      for (Ordinal alpha : g.y_[n - 1])
        for (LabeledTree::NodeId u = 1; u < g.tree_->size(); ++u)
          level.push_back(Atom{n, AtomKind::B, alpha, {}, g.tree_->path(u)});
  }
  std::sort(level.begin(), level.end());
  std::vector<std::size_t> ids;
  for (auto& a : level) {
    ids.push_back(g.atoms_.size());
    g.index_[a] = g.atoms_.size();
    g.atoms_.push_back(std::move(a));
    g.alias_sets_.emplace_back();
    g.slots_.emplace_back();
  }
  g.by_level_.push_back(std::move(ids));
}

void GroupAssembler::assign_slots(TruncatedGroup& g, std::size_t n) {
  const auto& ids = g.by_level_[n];
  const auto& layout = g.layout_;
  std::vector<Ordinal> y;
  if (n == 1 && g.level1_subset_) {
    // round robin over the sorted subset; atoms past its size stay unindexed
    const auto& s = *g.level1_subset_;
    for (std::size_t k = 0; k < s.size(); ++k) {
      Ordinal alpha{1, s[k]};
      g.alias_sets_[ids[k % ids.size()]].push_back(alpha);
    }
  } else {
    if (ids.size() > layout.index_size())
      throw CapacityError(n, std::to_string(ids.size()) + " atoms exceed index size L=" +
                                 std::to_string(layout.index_size()));
    for (std::size_t k = 0; k < ids.size(); ++k) {
      g.slots_[ids[k]] = k;
      g.alias_sets_[ids[k]] = layout.g(n, k);
    }
  }
  for (auto id : ids)
    for (Ordinal alpha : g.alias_sets_[id]) {
      g.alias_[alpha] = id;
      y.push_back(alpha);
    }
  std::sort(y.begin(), y.end());
  g.y_.push_back(std::move(y));
}

void GroupAssembler::add_families(TruncatedGroup& g) {
  const std::size_t top = g.layout_.blocks();
  const auto& P = g.primes_;
  auto push = [&](Family f) {
    if (f.vectors.empty()) return;
    g.family_of_[f.prime] = g.families_.size();
    g.families_.push_back(std::move(f));
  };
  for (std::size_t n = 0; n <= top; ++n) {
    Family base{P.p(n, 0, 0), FamilyKind::Single, n, 0, 0, {}};
    for (auto id : g.by_level_[n]) base.vectors.push_back(GroupElement::atom(id));
    push(std::move(base));
    if (g.tree_) {
      Label l0 = g.tree_->label(g.tree_->root());
      Family root{P.q(n, 0, l0, 0), FamilyKind::TreeRoot, n, 0, l0, {}};
      for (auto id : g.by_level_[n]) root.vectors.push_back(GroupElement::atom(id));
      push(std::move(root));
    }
    if (n == top) continue;

    // families keyed by (m) or (m, label), filled from level n+1
    std::map<std::size_t, Family> single, chain;
    std::map<std::pair<std::size_t, Label>, Family> tree_chain;
    for (auto id : g.by_level_[n + 1]) {
      const Atom& a = g.atoms_[id];
      if (a.kind == AtomKind::A) {
        std::size_t m = a.z.size();
        auto& fs = single.try_emplace(m, Family{P.p(n, m, 0), FamilyKind::Single, n, m, 0, {}})
                       .first->second;
        fs.vectors.push_back(GroupElement::atom(id));
        std::size_t below;
        if (m == 1) {
          below = *g.alias(a.alpha);
        } else {
          Atom prefix = a;
          prefix.z.pop_back();
          below = g.index_.at(prefix);
        }
        auto& fc = chain.try_emplace(m, Family{P.p(n, m, 1), FamilyKind::Chain, n, m, 0, {}})
                       .first->second;
        fc.vectors.push_back(GroupElement::atom(id) + GroupElement::atom(below));
      } else {
        std::size_t m = a.eta.size();
        Label l = g.tree_->label(*g.tree_->find(a.eta));
        std::size_t below;
        if (m == 1) {
          below = *g.alias(a.alpha);
        } else {
          Atom prefix = a;
          prefix.eta.pop_back();
          below = g.index_.at(prefix);
        }
        auto& ft = tree_chain
                       .try_emplace({m, l}, Family{P.q(n, m, l, 1), FamilyKind::TreeChain, n, m,
                                                   l, {}})
                       .first->second;
        ft.vectors.push_back(GroupElement::atom(id) + GroupElement::atom(below));
      }
    }
    for (auto& [m, f] : single) push(std::move(f));
    for (auto& [m, f] : chain) push(std::move(f));
    for (auto& [k, f] : tree_chain) push(std::move(f));
  }
  for (auto& f : g.families_) g.lattices_.emplace_back(f.prime, f.vectors);
}

TruncatedGroup GroupAssembler::assemble(
    const BlockLayout& layout, const std::optional<LabeledTree>& tree, const PrimeTable& primes,
    const std::optional<std::vector<std::size_t>>& level1_subset) {
  if (tree)
    for (LabeledTree::NodeId u = 0; u < tree->size(); ++u)
      if (tree->label(u) > primes.label_bound())
        throw InputError("tree label " + std::to_string(tree->label(u)) +
                         " above the prime table's label bound");
  TruncatedGroup g(layout, primes);
  g.tree_ = tree;
  g.level1_subset_ = level1_subset;
  const std::size_t top = layout.blocks();
  for (std::size_t n = 0; n <= top; ++n) {
    add_level(g, n);
    if (n < top) assign_slots(g, n);
  }
  add_families(g);
  return g;
}

TruncatedGroup build_group(const BlockLayout& layout, const std::optional<LabeledTree>& tree,
                           const PrimeTable& primes) {
  return GroupAssembler::assemble(layout, tree, primes, std::nullopt);
}

TruncatedGroup build_group_on_subset(const BlockLayout& layout, const PrimeTable& primes,
                                     std::vector<std::size_t> level1_offsets) {
  if (layout.blocks() < 2) throw InputError("subset builds need at least two blocks");
  std::sort(level1_offsets.begin(), level1_offsets.end());
  if (level1_offsets.empty()) throw InputError("empty level-1 subset");
  if (std::adjacent_find(level1_offsets.begin(), level1_offsets.end()) != level1_offsets.end())
    throw InputError("level-1 subset has repeated offsets");
  if (level1_offsets.back() >= layout.block_capacity())
    throw InputError("level-1 subset offset outside the block");
  return GroupAssembler::assemble(layout, std::nullopt, primes, std::move(level1_offsets));
}

// ---- membership ----------------------------------------------------------------

namespace {

// Primes dividing the denominator, ascending; nullopt if some prime has no family.
std::optional<std::vector<Prime>> denominator_primes(const TruncatedGroup& g,
                                                     const GroupElement& x) {
  Integer d = x.denominator();
  std::vector<Prime> out;
  for (auto& f : g.families()) {
    if (d == 1) break;
    if (mpz_divisible_ui_p(d.get_mpz_t(), f.prime)) {
      out.push_back(f.prime);
      d = strip_prime(d, f.prime);
    }
  }
  if (d != 1) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

bool contains(const TruncatedGroup& g, const GroupElement& x) {
  g.check_element(x);
  auto primes = denominator_primes(g, x);
  if (!primes) return false;
  for (Prime p : *primes)
    if (!g.lattice(p)->contains_locally(x)) return false;
  return true;
}

bool divides_pinf(const TruncatedGroup& g, Prime p, const GroupElement& x) {
  if (!contains(g, x)) throw InputError("element is not in the group");
  if (x.is_zero()) return true;
  const LocalLattice* lat = g.lattice(p);
  return lat != nullptr && lat->in_span(x);
}

Decomposition decompose(const TruncatedGroup& g, const GroupElement& x) {
  if (!contains(g, x)) throw InputError("element is not in the group");
  Decomposition out;
  out.remainder = x;
  auto primes = denominator_primes(g, x);
  for (Prime p : *primes) {
    GroupElement part = g.lattice(p)->localized_part(x);
    if (part.is_zero()) continue;
    out.remainder -= part;
    out.parts.emplace(p, std::move(part));
  }
  if (!out.remainder.is_integral())
    throw std::logic_error("decomposition left a non-integral remainder");
  return out;
}

} // namespace rigidlab
