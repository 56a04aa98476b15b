#include <doctest.h>

#include "oracles.hpp"
#include "rigidlab/backforth.hpp"
#include "rigidlab/errors.hpp"

using namespace rigidlab;

using Orders = std::vector<std::uint64_t>;

TEST_CASE("partial isomorphisms") {
  FiniteAbelianGroup a({4}), b({2, 2});
  CHECK(is_partial_isomorphism(a, b, {}));
  CHECK(is_partial_isomorphism(a, a, {{1, 3}}));
  // order 4 cannot match order 2
  CHECK_FALSE(is_partial_isomorphism(a, b, {{1, b.element({1, 0})}}));
  CHECK(is_partial_isomorphism(a, b, {{2, b.element({1, 0})}}));
  CHECK_FALSE(is_partial_isomorphism(a, a, {{1, 1}, {2, 1}}));
}

TEST_CASE("small decisions") {
  CHECK_FALSE(ef_equiv(FiniteAbelianGroup({4}), FiniteAbelianGroup({2, 2})));
  CHECK(ef_equiv(FiniteAbelianGroup({6}), FiniteAbelianGroup({2, 3})));
  CHECK(ef_equiv(FiniteAbelianGroup({2, 4}), FiniteAbelianGroup({4, 2})));
  CHECK_FALSE(ef_equiv(FiniteAbelianGroup({2}), FiniteAbelianGroup({3})));
  CHECK_FALSE(ef_equiv(FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({2, 2, 2})));
  CHECK(ef_equiv(FiniteAbelianGroup(Orders{}), FiniteAbelianGroup(Orders{})));
}

TEST_CASE("agrees with the primary decomposition") {
  auto pres = oracle::presentations(16);
  for (auto& x : pres)
    for (auto& y : pres) {
      FiniteAbelianGroup a(x), b(y);
      CHECK(ef_equiv(a, b) == (oracle::primary_components(x) == oracle::primary_components(y)));
    }
}

TEST_CASE("equivalence relation") {
  auto pres = oracle::presentations(12);
  std::vector<std::vector<bool>> rel(pres.size(), std::vector<bool>(pres.size()));
  for (std::size_t i = 0; i < pres.size(); ++i)
    for (std::size_t j = 0; j < pres.size(); ++j)
      rel[i][j] = ef_equiv(FiniteAbelianGroup(pres[i]), FiniteAbelianGroup(pres[j]));
  for (std::size_t i = 0; i < pres.size(); ++i) {
    CHECK(rel[i][i]);
    for (std::size_t j = 0; j < pres.size(); ++j) {
      CHECK(rel[i][j] == rel[j][i]);
      for (std::size_t k = 0; k < pres.size(); ++k)
        if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
    }
  }
}

TEST_CASE("surviving states keep the extension property") {
  BackForthGame game(FiniteAbelianGroup({2, 4}), FiniteAbelianGroup({4, 2}));
  REQUIRE(game.duplicator_wins());
  auto s = game.survivors(20);
  CHECK_FALSE(s.empty());
  for (auto& st : s) CHECK(game.audit(st));
  CHECK(game.states_decided() > 0);

  auto init = game.initial();
  // (0,1) has order 4 in the first group and (0,1) has order 2 in the second
  CHECK_FALSE(game.extend(init, game.a().element({0, 1}), game.b().element({0, 1})));
  auto good = game.extend(init, game.a().element({0, 1}), game.b().element({1, 1}));
  REQUIRE(good);
  CHECK((*good)[game.a().element({0, 2})] == static_cast<int>(game.b().element({2, 0})));
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(BackForthGame(FiniteAbelianGroup({4097}), FiniteAbelianGroup({2})), InputError);
}
