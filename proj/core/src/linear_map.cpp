#include "linfty/linear_map.hpp"

#include "linfty/errors.hpp"

namespace linfty {

namespace {

void add_entry(LinearMap::Entries& e, std::size_t r, std::size_t c, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = e.try_emplace({r, c}, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) e.erase(it);
  }
}

}  // namespace

LinearMap::LinearMap(GradedSpace source, GradedSpace target, Parity parity, Entries entries)
    : source_(std::move(source)), target_(std::move(target)), parity_(parity) {
  for (auto& [rc, v] : entries) {
    auto [r, c] = rc;
    require(r < target_.dim() && c < source_.dim(), ErrorCode::Shape, "linear map entry out of range");
    if (v.is_zero()) continue;
    require(target_.parity(r) == source_.parity(c) + parity_, ErrorCode::Parity,
            "linear map entry " + target_.name(r) + " <- " + source_.name(c) + " has the wrong parity");
    entries_.emplace(rc, v);
  }
}

LinearMap LinearMap::identity(const GradedSpace& v) {
  Entries e;
  for (std::size_t i = 0; i < v.dim(); ++i) e[{i, i}] = Rational(1);
  return LinearMap(v, v, Parity::Even, std::move(e));
}

LinearMap LinearMap::zero(const GradedSpace& source, const GradedSpace& target, Parity parity) {
  return LinearMap(source, target, parity);
}

Rational LinearMap::at(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational() : it->second;
}

Vector LinearMap::apply(const Vector& x) const {
  require(x.size() == source_.dim(), ErrorCode::Shape, "vector size does not match source");
  Vector y(target_.dim());
  for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
  return y;
}

SparseMatrix LinearMap::matrix() const {
  SparseMatrix m(target_.dim(), source_.dim());
  for (const auto& [rc, v] : entries_) m.add(rc.first, rc.second, v);
  return m;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  require(source_ == o.source_ && target_ == o.target_, ErrorCode::Space, "adding maps between different spaces");
  require(parity_ == o.parity_ || o.is_zero() || is_zero(), ErrorCode::Parity, "adding maps of different parity");
  Entries e = entries_;
  for (const auto& [rc, v] : o.entries_) add_entry(e, rc.first, rc.second, v);
  return LinearMap(source_, target_, is_zero() ? o.parity_ : parity_, std::move(e));
}

LinearMap LinearMap::operator-(const LinearMap& o) const { return *this + o * Rational(-1); }

LinearMap LinearMap::operator*(const Rational& s) const {
  Entries e;
  if (!s.is_zero())
    for (const auto& [rc, v] : entries_) e.emplace(rc, v * s);
  return LinearMap(source_, target_, parity_, std::move(e));
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
  require(a.source() == b.target(), ErrorCode::Space, "composing maps with mismatched spaces");
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> by_row;
  for (const auto& [rc, v] : b.entries()) by_row[rc.first].push_back({rc.second, v});
  LinearMap::Entries e;
  for (const auto& [rc, v] : a.entries()) {
    auto it = by_row.find(rc.second);
    if (it == by_row.end()) continue;
    for (const auto& [col, w] : it->second) add_entry(e, rc.first, col, v * w);
  }
  return LinearMap(b.source(), a.target(), a.parity() + b.parity(), std::move(e));
}

LinearMap inverse(const LinearMap& a) {
  const auto& v = a.source();
  require(a.target() == v, ErrorCode::Shape, "inverse of a non-square map");
  SparseMatrix m = a.matrix();
  LinearMap::Entries inv;
  for (std::size_t c = 0; c < v.dim(); ++c) {
    auto r = solve(m, SparseVector{{c, Rational(1)}});
    require(r.solvable, ErrorCode::Precondition, "map is not invertible");
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (!r.solution[i].is_zero()) inv[{i, c}] = r.solution[i];
  }
  return LinearMap(v, v, a.parity(), std::move(inv));
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) {
  return compose(a, b) - compose(b, a) * sign_power(koszul(a.parity(), b.parity()));
}

Rational supertrace(const LinearMap& a) {
  require(a.source() == a.target(), ErrorCode::Shape, "supertrace of a non-square map");
  Rational s;
  for (const auto& [rc, v] : a.entries())
    if (rc.first == rc.second) s += a.source().parity(rc.first) == Parity::Even ? v : -v;
  return s;
}

BilinearForm::BilinearForm(GradedSpace space, Parity parity, const Entries& entries)
    : space_(std::move(space)), parity_(parity) {
  for (const auto& [ij, v] : entries) {
    auto [i, j] = ij;
    require(i < space_.dim() && j < space_.dim(), ErrorCode::Shape, "form entry out of range");
    if (v.is_zero()) continue;
    require(space_.parity(i) + space_.parity(j) == parity_, ErrorCode::Parity,
            "form entry <" + space_.name(i) + "," + space_.name(j) + "> has the wrong parity");
    Rational mirrored = v * sign_power(koszul(space_.parity(i), space_.parity(j)));
    for (auto [key, val] : {std::pair{ij, v}, std::pair{std::pair{j, i}, mirrored}}) {
      auto [it, fresh] = entries_.try_emplace(key, val);
      require(fresh || it->second == val, ErrorCode::Shape,
              "form entries for <" + space_.name(i) + "," + space_.name(j) + "> violate graded symmetry");
    }
  }
}

Rational BilinearForm::at(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational() : it->second;
}

Rational BilinearForm::operator()(const Vector& u, const Vector& v) const {
  Rational s;
  for (const auto& [ij, w] : entries_) s += u[ij.first] * w * v[ij.second];
  return s;
}

SparseMatrix BilinearForm::matrix() const {
  SparseMatrix m(space_.dim(), space_.dim());
  for (const auto& [ij, w] : entries_) m.add(ij.first, ij.second, w);
  return m;
}

bool BilinearForm::nondegenerate() const { return rank(matrix()) == space_.dim(); }

LinearMap form_dual(const BilinearForm& form) {
  require(form.nondegenerate(), ErrorCode::Precondition, "form_dual needs a nondegenerate form");
  GradedSpace dual = dual_space(form.space());
  LinearMap::Entries e;
  for (const auto& [ij, w] : form.entries()) e[{ij.second, ij.first}] = w;
  return LinearMap(form.space(), dual, form.parity(), std::move(e));
}

Complex::Complex(GradedSpace space, LinearMap differential) : space_(std::move(space)), d_(std::move(differential)) {
  require(d_.source() == space_ && d_.target() == space_, ErrorCode::Space, "differential must be an endomorphism");
  require(d_.parity() == Parity::Odd || d_.is_zero(), ErrorCode::Parity, "differential must be odd");
  require(compose(d_, d_).is_zero(), ErrorCode::Precondition, "differential does not square to zero");
}

Complex Complex::trivial(const GradedSpace& space) {
  return Complex(space, LinearMap::zero(space, space, Parity::Odd));
}

}  // namespace linfty
