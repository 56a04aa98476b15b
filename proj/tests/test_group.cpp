#include <doctest.h>

#include "oracles.hpp"
#include "rigidlab/errors.hpp"

using namespace rigidlab;

namespace {

LabeledTree chain_tree() { return LabeledTree::from_nodes({{{}, 0}, {{0}, 1}}); }

TruncatedGroup tiny(std::optional<LabeledTree> t = std::nullopt) {
  auto l = BlockLayout::build(4, 2, 1, 1, 0);
  return build_group(l, t, primes_for(l, t));
}

TruncatedGroup mid() {
  auto l = BlockLayout::build(4, 3, 2, 3, 0);
  return build_group(l, std::nullopt, primes_for(l, std::nullopt));
}

GroupElement random_member(const TruncatedGroup& g, std::mt19937_64& rng) {
  GroupElement x;
  for (int t = rng() % 3; t >= 0; --t) x.add(rng() % g.rank(), static_cast<long>(rng() % 7) - 3);
  for (int t = rng() % 3; t > 0; --t) {
    const Family& f = g.families()[rng() % g.families().size()];
    Rational c(static_cast<long>(rng() % 5) - 2);
    for (int k = rng() % 3; k > 0; --k) c /= f.prime;
    x += f.vectors[rng() % f.vectors.size()] * c;
  }
  return x;
}

} // namespace

TEST_CASE("atom counts follow the z sequences") {
  auto l = BlockLayout::build(8, 2, 1, 0, 2);
  auto root_only = LabeledTree::single(0);
  auto g = build_group(l, root_only, primes_for(l, root_only));
  std::size_t want = 0;
  for (auto a : l.g(0, 0)) want += z_sequences(a, l).size();
  CHECK(g.level_atoms(1).size() == want);
  for (auto i : g.level_atoms(1)) CHECK(g.atom(i).kind == AtomKind::A);
  CHECK(g.level_atoms(0).size() == 1);
  // the only tree family is the root one
  for (auto& f : g.families())
    if (f.kind == FamilyKind::TreeChain) FAIL("unexpected tree chain family");
}

TEST_CASE("designated primes are distinct and the lists do not overlap") {
  auto g = tiny(chain_tree());
  std::set<Prime> seen;
  for (auto& f : g.families()) {
    CHECK(is_prime(f.prime));
    CHECK(seen.insert(f.prime).second);
  }
  std::set<Prime> ps, qs;
  for (auto& [k, p] : g.primes().p_map()) ps.insert(p);
  for (auto& [k, p] : g.primes().q_map()) qs.insert(p);
  for (auto p : ps) CHECK(qs.count(p) == 0);
  CHECK(ps.size() == g.primes().p_map().size());
  CHECK(qs.size() == g.primes().q_map().size());
}

TEST_CASE("tree chain family on the tiny build") {
  auto t = chain_tree();
  auto g = tiny(t);
  Prime q = g.primes().q(0, 1, t.label(1), 1);
  const Family* f = g.family(q);
  REQUIRE(f);
  CHECK(f->kind == FamilyKind::TreeChain);
  std::size_t root = g.level_atoms(0).front();
  for (auto alpha : g.alias_set(root)) {
    auto b = g.find(Atom{1, AtomKind::B, alpha, {}, {0}});
    REQUIRE(b);
    GroupElement v = GroupElement::atom(*b) + GroupElement::atom(root);
    CHECK(std::find(f->vectors.begin(), f->vectors.end(), v) != f->vectors.end());
  }
}

TEST_CASE("alias consistency and capacity") {
  auto g = mid();
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (auto alpha : g.alias_set(i)) CHECK(g.alias(alpha) == i);
  auto l = BlockLayout::build(2, 3, 2, 3);
  try {
    build_group(l, std::nullopt, primes_for(l, std::nullopt));
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.level() == 1);
    CHECK(std::string(e.what()).rfind("level 1", 0) == 0);
  }
}

TEST_CASE("generator membership examples") {
  auto g = mid();
  for (std::size_t i = 0; i < g.rank(); ++i) CHECK(contains(g, GroupElement::atom(i)));
  for (auto& f : g.families())
    for (auto& v : f.vectors) {
      CHECK(contains(g, v / f.prime));
      CHECK(contains(g, v / (Integer(f.prime) * f.prime * f.prime)));
    }
  // a level-2 atom with |z| = 2 alone is not divisible by its chain prime
  for (auto i : g.level_atoms(2)) {
    const Atom& a = g.atom(i);
    if (a.kind != AtomKind::A || a.z.size() != 2) continue;
    Prime p1 = g.primes().p(1, 2, 1);
    Prime p0 = g.primes().p(1, 2, 0);
    CHECK(contains(g, GroupElement::atom(i) / p0));
    CHECK_FALSE(contains(g, GroupElement::atom(i) / p1));
    ZSequence prefix(a.z.begin(), a.z.begin() + 1);
    auto j = g.find(Atom{2, AtomKind::A, a.alpha, prefix, {}});
    REQUIRE(j);
    CHECK(contains(g, (GroupElement::atom(i) + GroupElement::atom(*j)) / p1));
    CHECK(divides_pinf(g, p1, GroupElement::atom(i) + GroupElement::atom(*j)));
    break;
  }
}

TEST_CASE("membership agrees with the generator oracle") {
  auto g = tiny(chain_tree());
  oracle::GeneratorOracle gen(g, 3);
  std::mt19937_64 rng(31);
  std::vector<Prime> fp;
  for (auto& f : g.families()) fp.push_back(f.prime);
  std::size_t yes = 0;
  for (int t = 0; t < 3000; ++t) {
    GroupElement x;
    Integer d = Integer(fp[rng() % fp.size()]) * (rng() % 2 ? fp[rng() % fp.size()] : 1);
    for (std::size_t i = 0; i < g.rank(); ++i)
      if (rng() % 2) x.set(i, Rational(Integer(static_cast<long>(rng() % 11) - 5), d));
    if (t % 2) x = random_member(g, rng);
    auto want = gen.contains(x);
    if (!want) continue;
    CHECK(contains(g, x) == *want);
    yes += *want;
  }
  CHECK(yes > 0);
  // a prime without a family never divides denominators
  CHECK_FALSE(contains(g, GroupElement::atom(0) / 1009));
}

TEST_CASE("root divisibility") {
  auto t = chain_tree();
  auto g = tiny(t);
  std::size_t root = g.level_atoms(0).front();
  CHECK(divides_pinf(g, g.primes().p(0, 0, 0), GroupElement::atom(root)));
  CHECK(divides_pinf(g, g.primes().q(0, 0, t.label(0), 0), GroupElement::atom(root)));
  CHECK(divides_pinf(g, 2, GroupElement{}));
  GroupElement outside = GroupElement::atom(root) / 1009;
  CHECK_THROWS_AS(divides_pinf(g, 2, outside), InputError);
}

TEST_CASE("divisibility agrees with iterated division and is closed") {
  for (auto g : {mid(), tiny(chain_tree())}) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 150; ++t) {
      GroupElement x = random_member(g, rng);
      REQUIRE(contains(g, x));
      for (auto& f : g.families()) {
        GroupElement y = x;
        bool slow = true;
        for (int k = 0; k <= 10 && slow; ++k, y /= f.prime) slow = contains(g, y);
        bool fast = divides_pinf(g, f.prime, x);
        CHECK(fast == slow);
        if (fast) {
          CHECK(divides_pinf(g, f.prime, x / f.prime));
          GroupElement v = f.vectors[rng() % f.vectors.size()] / f.prime;
          CHECK(divides_pinf(g, f.prime, x + v));
        }
      }
    }
  }
}

TEST_CASE("membership is invariant under adding generators") {
  auto g = mid();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    GroupElement x;
    for (std::size_t i = 0; i < 3; ++i)
      x.set(rng() % g.rank(), Rational(Integer(1), Integer(2 + rng() % 30)));
    bool in = contains(g, x);
    const Family& f = g.families()[rng() % g.families().size()];
    GroupElement gen = f.vectors[rng() % f.vectors.size()] / f.prime;
    CHECK(contains(g, x + gen) == in);
    CHECK(contains(g, x - GroupElement::atom(rng() % g.rank())) == in);
  }
}

TEST_CASE("decomposition round trip") {
  auto g = mid();
  std::mt19937_64 rng(9);
  GroupElement integral = GroupElement::atom(0, 3) + GroupElement::atom(1, -2);
  auto d0 = decompose(g, integral);
  CHECK(d0.parts.empty());
  CHECK(d0.remainder == integral);
  const Family& f = g.families().back();
  auto d1 = decompose(g, f.vectors.front() / (Integer(f.prime) * f.prime));
  CHECK(d1.parts.size() == 1);
  CHECK(d1.remainder.is_zero());
  for (int t = 0; t < 200; ++t) {
    GroupElement x = random_member(g, rng);
    auto d = decompose(g, x);
    GroupElement sum = d.remainder;
    for (auto& [p, part] : d.parts) {
      sum += part;
      CHECK(g.lattice(p)->in_span(part));
    }
    CHECK(sum == x);
    CHECK(d.remainder.is_integral());
  }
  CHECK_THROWS_AS(decompose(g, GroupElement::atom(0) / 1009), InputError);
}

TEST_CASE("prime tables") {
  auto t = PrimeTable::standard(1, 1, 0);
  CHECK(t.p(0, 0, 0) == 2);
  CHECK_THROWS_AS(t.p(5, 0, 0), CapacityError);
  CHECK(t == PrimeTable::standard(1, 1, 0));
  CHECK_THROWS_AS(PrimeTable::from_maps(0, 0, 0, {{{0, 0, 0}, 4}}, {{{0, 0, 0, 0}, 3}}), InputError);
  CHECK_THROWS_AS(PrimeTable::from_maps(0, 0, 0, {{{0, 0, 0}, 3}}, {{{0, 0, 0, 0}, 3}}), InputError);
}

TEST_CASE("rationals parse and print exactly") {
  CHECK(to_text(parse_rational("6/4")) == "3/2");
  CHECK(to_text(Rational(-2)) == "-2/1");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("0.5"), InputError);
  CHECK(valuation(Rational(Integer(4), Integer(27)), 3) == -3);
  // 5/12 - 3/4 = -1/3 has no 2 in the denominator
  CHECK(p_power_part(Rational(Integer(5), Integer(12)), 2) == Rational(Integer(3), Integer(4)));
  CHECK(p_power_part(Rational(7), 2) == 0);
}
