#pragma once

#include "rigidlab/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rigidlab {

// Direct sum of cyclic groups Z/d_0 + ... + Z/d_{k-1}, every d_i >= 2.
// Elements are indexed in mixed radix with component 0 most significant.
class FiniteAbelianGroup {
public:
  using Element = std::size_t;
  static constexpr std::size_t kMaxOrder = std::size_t{1} << 20;

  // Throws InputError for orders below 2 or a total order above kMaxOrder.
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> orders);

  const std::vector<std::uint64_t>& orders() const { return orders_; }
  std::size_t order() const { return order_; }
  Element zero() const { return 0; }

  std::vector<std::int64_t> coords(Element x) const;
  // Reduces every coordinate into range first.
  Element element(const std::vector<std::int64_t>& coords) const;
  Element add(Element x, Element y) const;
  Element neg(Element x) const;
  Element multiple(Element x, std::int64_t k) const;
  std::size_t element_order(Element x) const;
  // Unit vector of component i.
  Element generator(std::size_t i) const;

  bool operator==(const FiniteAbelianGroup&) const = default;

private:
  std::vector<std::uint64_t> orders_;
  std::vector<std::size_t> stride_;
  std::size_t order_ = 1;
};

// Ascending d_1 | d_2 | ... with every d_i >= 2.
std::vector<std::uint64_t> invariant_factors(const FiniteAbelianGroup& a);

// Row Hermite normal form: echelon, positive pivots, entries above each pivot
// reduced into [0, pivot). Zero rows dropped.
std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> rows,
                                               std::size_t cols);

} // namespace rigidlab
