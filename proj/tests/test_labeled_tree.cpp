#include <doctest.h>

#include "oracles.hpp"
#include "rigidlab/errors.hpp"

using namespace rigidlab;

namespace {

LabeledTree tree(std::vector<std::pair<NodePath, Label>> nodes) {
  return LabeledTree::from_nodes(std::move(nodes));
}

} // namespace

TEST_CASE("quasi-order construction") {
  CHECK_THROWS_AS(QuasiOrder({0, 1}, {{0, 1}}), InputError);  // not reflexive
  CHECK_THROWS_AS(QuasiOrder({0, 1, 2}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}), InputError);
  QuasiOrder q({0, 1, 2}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}});
  CHECK(q.leq(0, 2));
  CHECK_FALSE(q.leq(2, 0));
  CHECK_THROWS_AS(q.leq(0, 7), InputError);
  auto c = QuasiOrder::chain(3);
  CHECK(c.leq(0, 1));
  CHECK_FALSE(c.leq(2, 1));
  auto e = QuasiOrder::equality({3, 5});
  CHECK(e.leq(5, 5));
  CHECK_FALSE(e.leq(3, 5));
}

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(tree({{{0}, 1}}), InputError);                 // no root
  CHECK_THROWS_AS(tree({{{}, 0}, {{0, 0}, 1}}), InputError);     // missing prefix
  CHECK_THROWS_AS(tree({{{}, 0}, {{0}, 1}, {{0}, 2}}), InputError);  // duplicate
  auto t = tree({{{1}, 2}, {{}, 0}, {{0}, 1}, {{0, 3}, 1}});
  CHECK(t.size() == 4);
  CHECK(t.path(0).empty());
  CHECK(t.label(*t.find({0, 3})) == 1);
  CHECK(t.parent(*t.find({0, 3})) == *t.find({0}));
  CHECK(t.max_height() == 2);
}

TEST_CASE("embedding examples") {
  auto q = QuasiOrder::chain(3);
  CHECK(embeds(LabeledTree::single(0), LabeledTree::single(1), q));
  CHECK_FALSE(embeds(LabeledTree::single(1), LabeledTree::single(0), q));
  auto chain2 = tree({{{}, 0}, {{0}, 0}, {{0, 0}, 0}});
  CHECK_FALSE(embeds(chain2, LabeledTree::single(2), q));
  // non-injective: two children land on one
  auto fork = tree({{{}, 0}, {{0}, 1}, {{1}, 1}});
  auto stick = tree({{{}, 0}, {{0}, 1}});
  CHECK(embeds(fork, stick, q));
  auto w = find_embedding(fork, stick, q);
  REQUIRE(w);
  CHECK(w->image == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("identity witness and smallest-child tie break") {
  auto q = QuasiOrder::chain(3);
  auto t = tree({{{}, 0}, {{0}, 1}, {{1}, 1}, {{1, 0}, 2}});
  auto w = find_embedding(t, t, q);
  REQUIRE(w);
  // node <0> could go to <0> or <1>; the smallest target child wins
  CHECK(w->image == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(is_valid_morphism(*w, t, t, q));
}

TEST_CASE("embeds agrees with exhaustive map search (random 1..7 nodes)") {
  auto q = QuasiOrder::chain(3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int i = 0; i < 2000; ++i) {
    auto a = oracle::random_tree(rng, size(rng), 3);
    auto b = oracle::random_tree(rng, size(rng), 3);
    bool e = embeds(a, b, q);
    CHECK(e == oracle::tree_map_exists(a, b, q));
    auto w = find_embedding(a, b, q);
    CHECK(w.has_value() == e);
    if (w) {
      CHECK(oracle::morphism_ok(w->image, a, b, q));
      CHECK(is_valid_morphism(*w, a, b, q));
    }
  }
}

TEST_CASE("the checker rejects broken maps") {
  auto q = QuasiOrder::chain(3);
  auto t = tree({{{}, 0}, {{0}, 1}, {{0, 0}, 1}, {{1}, 1}, {{1, 0}, 1}});
  TreeMorphism cross{{0, 1, 4, 3, 2}};  // child of <0> sent under <1>
  CHECK_FALSE(is_valid_morphism(cross, t, t, q));
  CHECK_FALSE(oracle::morphism_ok(cross.image, t, t, q));
  TreeMorphism height{{0, 2, 2, 3, 4}};
  CHECK_FALSE(is_valid_morphism(height, t, t, q));
}

TEST_CASE("order properties on random triples") {
  auto q = QuasiOrder::chain(3);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int i = 0; i < 500; ++i) {
    auto a = oracle::random_tree(rng, size(rng), 3);
    auto b = oracle::random_tree(rng, size(rng), 3);
    auto c = oracle::random_tree(rng, size(rng), 3);
    CHECK(embeds(a, a, q));
    if (embeds(a, b, q) && embeds(b, c, q)) CHECK(embeds(a, c, q));
    // raising every label of b keeps an embedding alive
    std::vector<std::pair<NodePath, Label>> up;
    for (std::size_t u = 0; u < b.size(); ++u) up.emplace_back(b.path(u), std::min<Label>(2, b.label(u) + 1));
    if (embeds(a, b, q)) CHECK(embeds(a, LabeledTree::from_nodes(up), q));
  }
}

TEST_CASE("antichain pairs") {
  auto q = QuasiOrder::equality({0, 1, 2});
  CHECK(antichain_pairs({LabeledTree::single(0), LabeledTree::single(1)}, q).empty());
  auto t = tree({{{}, 0}, {{0}, 2}});
  auto pairs = antichain_pairs({t, LabeledTree::single(1), t}, q);
  CHECK(pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {2, 0}});

  std::mt19937_64 rng(3);
  auto c = QuasiOrder::chain(3);
  std::vector<LabeledTree> fam;
  for (int i = 0; i < 5; ++i) fam.push_back(oracle::random_tree(rng, 4, 3));
  auto got = antichain_pairs(fam, c);
  std::vector<std::pair<std::size_t, std::size_t>> want;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j && oracle::tree_map_exists(fam[i], fam[j], c)) want.emplace_back(i, j);
  CHECK(got == want);
}

TEST_CASE("labels outside the order are rejected") {
  auto q = QuasiOrder::chain(2);
  CHECK_THROWS_AS(embeds(LabeledTree::single(5), LabeledTree::single(0), q), InputError);
}
