#include "linfty/gauge.hpp"

#include <algorithm>

namespace linfty {

namespace {

Vector column(const LinearMap& m, std::size_t j) {
  Vector e(m.source().dim());
  e[j] = Rational(1);
  return m.apply(e);
}

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

SparseVector sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace(i, v[i]);
  return s;
}

Vector dense(const SparseVector& s, std::size_t n) {
  Vector v(n);
  for (const auto& [i, c] : s) v[i] = c;
  return v;
}

}  // namespace

FiniteDgla::FiniteDgla(LieAlgebra lie) : FiniteDgla(lie, LinearMap::zero(lie.space(), lie.space(), Parity::Odd)) {}

FiniteDgla::FiniteDgla(LieAlgebra lie, LinearMap differential) : lie_(std::move(lie)), d_(std::move(differential)) {
  const auto& v = lie_.space();
  const std::size_t n = v.dim();
  require(d_.source() == v && d_.target() == v, ErrorCode::Space, "differential on a foreign space");
  require(d_.parity() == Parity::Odd || d_.is_zero(), ErrorCode::Parity, "differential must be odd");
  require(compose(d_, d_).is_zero(), ErrorCode::Precondition, "differential does not square to zero");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = bracket(basis(a), basis(b));
      // d[a,b] = [da,b] + (-1)^{|a|}[a,db]
      auto leibniz = add(d(ab), scale(Rational(-1), add(bracket(d(basis(a)), basis(b)),
                                                         scale(sign_power(bit(v.parity(a))),
                                                               bracket(basis(a), d(basis(b)))))));
      require(is_zero(leibniz), ErrorCode::Precondition,
              "d is not a derivation on [" + v.name(a) + "," + v.name(b) + "]");
      for (std::size_t c = 0; c < n; ++c) {
        auto lhs = bracket(basis(a), bracket(basis(b), basis(c)));
        auto rhs = add(bracket(ab, basis(c)), scale(sign_power(koszul(v.parity(a), v.parity(b))),
                                                    bracket(basis(b), bracket(basis(a), basis(c)))));
        require(is_zero(add(lhs, scale(Rational(-1), rhs))), ErrorCode::Precondition,
                "Jacobi identity fails on " + v.name(a) + ", " + v.name(b) + ", " + v.name(c));
      }
    }
  }

  // lower central series
  std::vector<Vector> layer;
  for (std::size_t i = 0; i < n; ++i) layer.push_back(basis(i));
  std::size_t prev = n + 1;
  for (int c = 0;; ++c) {
    Echelon span;
    std::vector<Vector> next;
    for (const auto& x : layer)
      if (span.insert(sparse(x))) next.push_back(x);
    if (next.empty()) {
      nilpotency_ = c;
      break;
    }
    if (next.size() >= prev) break;
    prev = next.size();
    layer.clear();
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& x : next) layer.push_back(bracket(basis(i), x));
  }
}

Vector FiniteDgla::basis(std::size_t i) const {
  Vector e(space().dim());
  e.at(i) = Rational(1);
  return e;
}

Vector FiniteDgla::add(const Vector& a, const Vector& b) const {
  require(a.size() == space().dim() && b.size() == space().dim(), ErrorCode::Shape, "element has the wrong size");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector FiniteDgla::scale(const Rational& s, const Vector& a) const {
  Vector out(a);
  for (auto& c : out) c *= s;
  return out;
}

Vector FiniteDgla::bracket(const Vector& a, const Vector& b) const {
  require(a.size() == space().dim() && b.size() == space().dim(), ErrorCode::Shape, "element has the wrong size");
  Vector out(space().dim());
  for (const auto& [ij, v] : lie_.brackets()) {
    const auto& [i, j] = ij;
    if (a[i].is_zero() || b[j].is_zero()) continue;
    Rational c = a[i] * b[j];
    for (const auto& [k, x] : v) out[k] += c * x;
  }
  return out;
}

bool FiniteDgla::is_zero(const Vector& a) const { return all_zero(a); }

bool FiniteDgla::has_parity(const Vector& a, Parity p) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && space().parity(i) != p) return false;
  return true;
}

FiniteDgla twist(const FiniteDgla& g, const Vector& xi) {
  require(is_mc(g, xi), ErrorCode::Precondition, "twisting element is not Maurer-Cartan");
  LinearMap dxi = g.differential();
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (!xi[i].is_zero()) dxi = dxi + g.lie().ad(i) * xi[i];
  require(compose(dxi, dxi).is_zero(), ErrorCode::Precondition, "twisted differential does not square to zero");
  return FiniteDgla(g.lie(), dxi);
}

DerivationDgla::DerivationDgla(SpacePtr space, int cutoff)
    : DerivationDgla(space, Derivation(space, Parity::Odd, cutoff)) {}

DerivationDgla::DerivationDgla(SpacePtr space, Derivation delta) : space_(std::move(space)), delta_(std::move(delta)) {
  require(*delta_.space() == *space_, ErrorCode::Space, "differential on a foreign space");
  require(delta_.is_zero() || delta_.parity() == Parity::Odd, ErrorCode::Parity, "differential must be odd");
  require(delta_.is_zero() || delta_.min_weight() >= 1, ErrorCode::Precondition,
          "differential must not have constant terms");
  require(linfty::bracket(delta_, delta_).is_zero(), ErrorCode::Precondition, "differential does not square to zero");
}

namespace {

void check_element(const DerivationDgla& g, const Derivation& a) {
  require(*a.space() == *g.space(), ErrorCode::Space, "element on a foreign space");
  require(a.is_zero() || a.min_weight() >= 2, ErrorCode::Precondition, "elements must have weight at least 2");
}

}  // namespace

Derivation DerivationDgla::bracket(const Derivation& a, const Derivation& b) const {
  check_element(*this, a);
  check_element(*this, b);
  return truncate(linfty::bracket(a, b), cutoff());
}

Derivation DerivationDgla::d(const Derivation& a) const {
  check_element(*this, a);
  return truncate(linfty::bracket(delta_, a), cutoff());
}

SemidirectDgla::SemidirectDgla(SpacePtr space, Derivation d) : space_(std::move(space)), d_(std::move(d)) {
  require(*d_.space() == *space_, ErrorCode::Space, "differential on a foreign space");
  require(d_.is_zero() || d_.parity() == Parity::Odd, ErrorCode::Parity, "differential must be odd");
  require(d_ == weight_component(d_, 1), ErrorCode::Precondition, "differential must be linear");
  require(linfty::bracket(d_, d_).is_zero(), ErrorCode::Precondition, "differential does not square to zero");
}

namespace detail {

Rational log_exp_coefficient(const std::vector<int>& word) {
  const std::size_t m = word.size();
  // dp[j][n]: decompositions of the first j letters into n blocks X^r Y^s,
  // weighted by 1/(r! s!)
  std::vector<std::vector<Rational>> dp(m + 1, std::vector<Rational>(m + 1));
  dp[0][0] = Rational(1);
  for (std::size_t j = 0; j < m; ++j) {
    int r = 0, s = 0;
    for (std::size_t k = j; k < m; ++k) {
      if (word[k] == 0) {
        if (s > 0) break;
        ++r;
      } else {
        ++s;
      }
      Rational w = Rational(1) / (factorial(r) * factorial(s));
      for (std::size_t n = 0; n < m; ++n)
        if (!dp[j][n].is_zero()) dp[k + 1][n + 1] += dp[j][n] * w;
    }
  }
  Rational c;
  for (std::size_t n = 1; n <= m; ++n)
    c += sign_power(static_cast<int>(n) - 1) * dp[m][n] / Rational(static_cast<long>(n));
  return c;
}

}  // namespace detail

bool is_dgla_morphism(const LinearMap& f, const FiniteDgla& g, const FiniteDgla& h) {
  require(f.source() == g.space() && f.target() == h.space(), ErrorCode::Space, "map between foreign spaces");
  if (f.parity() != Parity::Even && !f.is_zero()) return false;
  if (!(compose(f, g.differential()) == compose(h.differential(), f))) return false;
  const std::size_t n = g.space().dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!all_zero(h.add(f.apply(g.bracket(g.basis(a), g.basis(b))),
                          h.scale(Rational(-1), h.bracket(column(f, a), column(f, b))))))
        return false;
  return true;
}

DglaCohomology cohomology(const FiniteDgla& g) {
  const auto& v = g.space();
  const std::size_t n = v.dim();
  DglaCohomology out;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (v.parity(i) == p) cols.push_back(i);
    SparseMatrix m(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, x] : sparse(g.d(g.basis(cols[c])))) m.add(r, c, x);
    Echelon image;
    for (std::size_t i = 0; i < n; ++i)
      if (v.parity(i) != p) image.insert(sparse(g.d(g.basis(i))));
    std::size_t count = 0;
    for (const auto& k : kernel_basis(m)) {
      SparseVector cycle;
      for (const auto& [c, x] : k) cycle.emplace(cols[c], x);
      if (!image.insert(cycle)) continue;
      ++count;
      if (p == Parity::Even) out.even_representatives.push_back(dense(cycle, n));
    }
    (p == Parity::Even ? out.even : out.odd) = count;
  }
  return out;
}

}  // namespace linfty
