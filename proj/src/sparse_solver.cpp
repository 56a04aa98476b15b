#include "rigidlab/sparse_solver.hpp"

#include "rigidlab/errors.hpp"

namespace rigidlab {

SparseSolver::SparseSolver(std::size_t variables) : vars_(variables), occurs_(variables) {}

void SparseSolver::eliminate(SparseRow& row) const {
  std::vector<std::pair<std::size_t, Rational>> hits;
  for (auto& [c, v] : row)
    if (rows_.count(c)) hits.emplace_back(c, v);
  for (auto& [c, v] : hits)
    for (auto& [k, w] : rows_.at(c)) {
      auto [it, fresh] = row.try_emplace(k, -v * w);
      if (!fresh) {
        it->second -= v * w;
        if (it->second == 0) row.erase(it);
      }
    }
}

SparseRow SparseSolver::reduce(SparseRow row) const {
  eliminate(row);
  return row;
}

void SparseSolver::set_entry(std::size_t owner, SparseRow& row, std::size_t col,
                             const Rational& v) {
  if (v == 0) {
    if (row.erase(col)) occurs_[col].erase(owner);
  } else {
    row[col] = v;
    occurs_[col].insert(owner);
  }
}

bool SparseSolver::add(SparseRow row) {
  for (auto& [c, v] : row)
    if (c >= vars_) throw InputError("equation mentions an unknown variable");
  eliminate(row);
  if (row.empty()) return false;
  // sparsest column as pivot keeps fill-in down
  std::size_t pivot = row.begin()->first;
  for (auto& [c, v] : row)
    if (occurs_[c].size() < occurs_[pivot].size()) pivot = c;
  Rational scale = row.at(pivot);
  for (auto& [c, v] : row) v /= scale;

  std::set<std::size_t> users = occurs_[pivot];
  for (auto owner : users) {
    SparseRow& other = rows_.at(owner);
    Rational f = other.at(pivot);
    for (auto& [c, v] : row) set_entry(owner, other, c, Rational(other.count(c) ? Rational(other.at(c) - f * v) : Rational(-f * v)));
  }
  for (auto& [c, v] : row) occurs_[c].insert(pivot);
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<SparseRow> SparseSolver::nullspace() const {
  std::vector<SparseRow> out;
  for (std::size_t f = 0; f < vars_; ++f) {
    if (rows_.count(f)) continue;
    SparseRow v{{f, Rational(1)}};
    for (auto owner : occurs_[f]) v[owner] = -rows_.at(owner).at(f);
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace rigidlab
