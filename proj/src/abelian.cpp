#include "rigidlab/abelian.hpp"

#include "rigidlab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace rigidlab {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> orders)
    : orders_(std::move(orders)) {
  stride_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 0;) {
    if (orders_[i] < 2) throw InputError("cyclic order " + std::to_string(orders_[i]) + " below 2");
    stride_[i] = order_;
    if (order_ > kMaxOrder / orders_[i]) throw InputError("group order too large");
    order_ *= orders_[i];
  }
}

std::vector<std::int64_t> FiniteAbelianGroup::coords(Element x) const {
  std::vector<std::int64_t> c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    c[i] = static_cast<std::int64_t>((x / stride_[i]) % orders_[i]);
  return c;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element(
    const std::vector<std::int64_t>& coords) const {
  if (coords.size() != orders_.size()) throw InputError("element has the wrong number of coordinates");
  Element x = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    auto d = static_cast<std::int64_t>(orders_[i]);
    x += static_cast<std::size_t>(((coords[i] % d) + d) % d) * stride_[i];
  }
  return x;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(Element x, Element y) const {
  Element out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::size_t a = (x / stride_[i]) % orders_[i];
    std::size_t b = (y / stride_[i]) % orders_[i];
    out += ((a + b) % orders_[i]) * stride_[i];
  }
  return out;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::neg(Element x) const { return multiple(x, -1); }

FiniteAbelianGroup::Element FiniteAbelianGroup::multiple(Element x, std::int64_t k) const {
  auto c = coords(x);
  for (auto& v : c) v *= k;
  return element(c);
}

std::size_t FiniteAbelianGroup::element_order(Element x) const {
  std::size_t ord = 1;
  auto c = coords(x);
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    auto d = orders_[i];
    std::size_t oi = d / std::gcd<std::uint64_t>(d, static_cast<std::uint64_t>(c[i]));
    ord = std::lcm(ord, oi);
  }
  return ord;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::generator(std::size_t i) const {
  if (i >= orders_.size()) throw InputError("no such component");
  return stride_[i];
}

std::vector<std::uint64_t> invariant_factors(const FiniteAbelianGroup& a) {
  // primary decomposition, then merge the k-th largest powers of each prime
  std::map<std::uint64_t, std::vector<std::uint64_t>> powers;
  for (auto d : a.orders()) {
    std::uint64_t r = d;
    for (std::uint64_t p = 2; p * p <= r; ++p) {
      if (r % p) continue;
      std::uint64_t pe = 1;
      while (r % p == 0) {
        r /= p;
        pe *= p;
      }
      powers[p].push_back(pe);
    }
    if (r > 1) powers[r].push_back(r);
  }
  std::size_t len = 0;
  for (auto& [p, v] : powers) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  std::vector<std::uint64_t> out(len, 1);
  for (auto& [p, v] : powers)
    for (std::size_t k = 0; k < v.size(); ++k) out[k] *= v[k];
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> rows,
                                               std::size_t cols) {
  std::size_t r = 0;
  const std::size_t m = rows.size();
  auto combine = [&](std::size_t i, std::size_t j, std::size_t c) {
    // rows i, j -> (x*Ri + y*Rj, (b/g)*Ri - (a/g)*Rj); determinant -1
    Integer a = rows[i][c], b = rows[j][c], g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer bg = b / g, ag = a / g;
    for (std::size_t k = 0; k < cols; ++k) {
      Integer ri = rows[i][k], rj = rows[j][k];
      rows[i][k] = x * ri + y * rj;
      rows[j][k] = bg * ri - ag * rj;
    }
  };
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i)
      if (rows[i][c] != 0) combine(r, i, c);
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

} // namespace rigidlab
