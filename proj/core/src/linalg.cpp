#include "linfty/linalg.hpp"

#include "linfty/errors.hpp"

namespace linfty {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto [it, fresh] = y.try_emplace(i, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

Rational dot(const SparseVector& a, const SparseVector& b) {
  Rational s;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else s += (ia++)->second * (ib++)->second;
  }
  return s;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  require(r < rows_.size() && c < cols_, ErrorCode::Shape, "matrix index out of range");
  axpy(rows_[r], v, SparseVector{{c, Rational(1)}});
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational s = dot(rows_[r], x);
    if (!s.is_zero()) y.emplace(r, s);
  }
  return y;
}

SparseVector SparseMatrix::apply_transpose(const SparseVector& y) const {
  SparseVector x;
  for (const auto& [r, c] : y) axpy(x, c, rows_[r]);
  return x;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
  return t;
}

SparseVector Echelon::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto piv = rows_.find(it->first);
    if (piv == rows_.end()) {
      ++it;
      continue;
    }
    std::size_t key = it->first;
    Rational c = it->second;
    axpy(v, -c, piv->second);
    it = v.upper_bound(key);
  }
  return v;
}

bool Echelon::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  Rational lead = r.begin()->second;
  for (auto& [i, x] : r) x /= lead;
  rows_.emplace(r.begin()->first, std::move(r));
  return true;
}

std::size_t rank(const SparseMatrix& a) {
  Echelon e;
  for (std::size_t r = 0; r < a.rows(); ++r) e.insert(a.row(r));
  return e.rank();
}

SolveResult solve(const SparseMatrix& a, const SparseVector& b) {
  const std::size_t n = a.cols();
  struct Row {
    SparseVector coeffs;  // columns 0..n-1, column n holds the right-hand side
    SparseVector combo;   // combination of original rows
  };
  std::map<std::size_t, Row> pivots;
  SolveResult result;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Row row{a.row(r), {{r, Rational(1)}}};
    if (auto it = b.find(r); it != b.end()) row.coeffs[n] = it->second;
    if (row.coeffs.empty()) continue;
    auto it = row.coeffs.begin();
    while (it != row.coeffs.end() && it->first < n) {
      auto piv = pivots.find(it->first);
      if (piv == pivots.end()) {
        ++it;
        continue;
      }
      std::size_t key = it->first;
      Rational c = it->second;
      axpy(row.coeffs, -c, piv->second.coeffs);
      axpy(row.combo, -c, piv->second.combo);
      it = row.coeffs.upper_bound(key);
    }
    if (row.coeffs.empty()) continue;
    if (row.coeffs.begin()->first == n) {
      result.solvable = false;
      result.certificate = std::move(row.combo);
      return result;
    }
    Rational lead = row.coeffs.begin()->second;
    for (auto& [i, x] : row.coeffs) x /= lead;
    for (auto& [i, x] : row.combo) x /= lead;
    pivots.emplace(row.coeffs.begin()->first, std::move(row));
  }
  result.solvable = true;
  result.solution.assign(n, Rational());
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& coeffs = it->second.coeffs;
    Rational x;
    for (const auto& [c, v] : coeffs) {
      if (c == it->first) continue;
      if (c == n) x += v;
      else x -= v * result.solution[c];
    }
    result.solution[it->first] = x;
  }
  return result;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& a) {
  // Reduced row echelon form, then one kernel vector per free column.
  std::map<std::size_t, SparseVector> pivots;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseVector v = a.row(r);
    auto it = v.begin();
    while (it != v.end()) {
      auto piv = pivots.find(it->first);
      if (piv == pivots.end()) {
        ++it;
        continue;
      }
      std::size_t key = it->first;
      Rational c = it->second;
      axpy(v, -c, piv->second);
      it = v.upper_bound(key);
    }
    if (v.empty()) continue;
    Rational lead = v.begin()->second;
    for (auto& [i, x] : v) x /= lead;
    pivots.emplace(v.begin()->first, std::move(v));
  }
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    for (auto jt = std::next(it); jt != pivots.rend(); ++jt) {
      auto f = jt->second.find(it->first);
      if (f != jt->second.end()) {
        Rational c = f->second;
        axpy(jt->second, -c, it->second);
      }
    }
  }
  std::vector<SparseVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (pivots.count(free)) continue;
    SparseVector k{{free, Rational(1)}};
    for (const auto& [p, row] : pivots) {
      auto f = row.find(free);
      if (f != row.end()) k[p] = -f->second;
    }
    basis.push_back(std::move(k));
  }
  return basis;
}

}  // namespace linfty
