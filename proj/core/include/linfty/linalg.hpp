#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "linfty/rational.hpp"

namespace linfty {

using SparseVector = std::map<std::size_t, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);  // y += a x
Rational dot(const SparseVector& a, const SparseVector& b);

// Row-major sparse matrix over Q.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  void add(std::size_t r, std::size_t c, const Rational& v);
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  SparseVector apply(const SparseVector& x) const;
  SparseVector apply_transpose(const SparseVector& y) const;
  SparseMatrix transpose() const;

 private:
  std::vector<SparseVector> rows_;
  std::size_t cols_;
};

// Row echelon basis of a subspace, grown one vector at a time.
class Echelon {
 public:
  // Reduces v against the basis; the remainder is zero iff v lies in the span.
  SparseVector reduce(SparseVector v) const;
  // Returns true if v was independent of the current span.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, SparseVector> rows_;  // pivot -> row with leading 1 at pivot
};

std::size_t rank(const SparseMatrix& a);

struct SolveResult {
  bool solvable = false;
  std::vector<Rational> solution;  // set when solvable; free variables are zero
  SparseVector certificate;        // when not solvable: y with y A = 0 and y b != 0
};

// Solves A x = b exactly.  The solution is the one with all free variables
// zero, using the leftmost available pivot for each row.
SolveResult solve(const SparseMatrix& a, const SparseVector& b);

// Basis of {x : A x = 0}.
std::vector<SparseVector> kernel_basis(const SparseMatrix& a);

}  // namespace linfty
