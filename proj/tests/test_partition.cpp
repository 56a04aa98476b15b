#include <doctest.h>

#include "oracles.hpp"
#include "rigidlab/errors.hpp"

#include <bit>

using namespace rigidlab;

namespace {

using Seq = std::vector<std::size_t>;

Color max_of(Subset s) { return s == 0 ? 0 : 63 - static_cast<Color>(std::countl_zero(s)); }

} // namespace

TEST_CASE("documented colorings") {
  auto constant = ColoringTable::from_function(5, 3, [](Subset) { return Color{7}; });
  CHECK(search_shift_invariant(constant, 4) == Seq{0, 1, 2, 3});
  auto parity = ColoringTable::from_function(5, 3, [](Subset s) { return Color(std::popcount(s) % 2); });
  CHECK(search_shift_invariant(parity, 4) == Seq{0, 1, 2, 3});
  auto fmax = ColoringTable::from_function(6, 5, max_of);
  for (std::size_t len = 2; len <= 6; ++len) CHECK_FALSE(search_shift_invariant(fmax, len));
}

TEST_CASE("attempt tree sizes") {
  auto constant = ColoringTable::from_function(3, 2, [](Subset) { return Color{0}; });
  CHECK(attempt_tree_size(constant, 3) == 16);
  auto fmax = ColoringTable::from_function(3, 2, max_of);
  CHECK(attempt_tree_size(fmax, 2) == 4);
  CHECK(attempt_tree_size(fmax, 0) == 1);
  CHECK_THROWS_AS(attempt_tree_size(fmax, 4), InputError);
}

TEST_CASE("preconditions") {
  auto f = ColoringTable::from_function(3, 2, [](Subset) { return Color{0}; });
  CHECK_FALSE(search_shift_invariant(f, 4));  // longer than the ground set
  auto g = ColoringTable::from_function(6, 2, [](Subset) { return Color{0}; });
  CHECK_THROWS_AS(search_shift_invariant(g, 4), InputError);
  std::map<Subset, Color> partial{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(ColoringTable(2, 1, partial), InputError);
}

TEST_CASE("search matches brute force on random tables") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 300; ++t) {
    std::size_t kappa = 1 + rng() % 6;
    auto f = ColoringTable::random(kappa, 3, 1 + rng() % 4, rng());
    for (std::size_t len = 0; len <= 4; ++len) {
      auto got = search_shift_invariant(f, len);
      CHECK(got == oracle::brute_shift_search(f, len));
      if (got) {
        CHECK(satisfies_shift_condition(f, *got));
        CHECK(oracle::shift_condition(f, *got));
      }
      // a sequence exists iff the attempt tree reaches that length
      if (len <= kappa) {
        bool reaches = attempt_tree_size(f, len) > (len == 0 ? 0 : attempt_tree_size(f, len - 1));
        CHECK(reaches == got.has_value());
      }
    }
  }
}

TEST_CASE("random tables are reproducible") {
  auto a = ColoringTable::random(5, 3, 3, 17);
  auto b = ColoringTable::random(5, 3, 3, 17);
  CHECK(a.table() == b.table());
  CHECK(subset_of({0, 3}) == 9);
  CHECK(elements_of(9) == Seq{0, 3});
}
