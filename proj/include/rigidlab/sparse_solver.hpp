#pragma once

#include "rigidlab/rational.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <vector>

namespace rigidlab {

using SparseRow = std::map<std::size_t, Rational>;

// Incremental exact reduced row echelon form over Q. Every stored row has
// pivot coefficient 1 and no entry in any other pivot column.
class SparseSolver {
public:
  explicit SparseSolver(std::size_t variables);

  // Adds sum(row) = 0. Returns false when the row was already implied.
  bool add(SparseRow row);
  // Residual of row after eliminating the pivot columns.
  SparseRow reduce(SparseRow row) const;

  std::size_t variables() const { return vars_; }
  std::size_t rank() const { return rows_.size(); }
  // One vector per free column, in increasing column order.
  std::vector<SparseRow> nullspace() const;

private:
  void eliminate(SparseRow& row) const;
  void set_entry(std::size_t owner, SparseRow& row, std::size_t col, const Rational& v);

  std::size_t vars_;
  std::map<std::size_t, SparseRow> rows_;  // pivot column -> row
  std::vector<std::set<std::size_t>> occurs_;  // column -> pivots whose rows use it
};

} // namespace rigidlab
