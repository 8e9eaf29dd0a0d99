#include "linfty/sdr.hpp"

#include "linfty/errors.hpp"

namespace linfty {

namespace {

void check_shapes(const SdrData& s) {
  const auto& v = s.big.space();
  const auto& b = s.small.space();
  require(s.i.source() == b && s.i.target() == v, ErrorCode::Shape, "i must map B to V");
  require(s.p.source() == v && s.p.target() == b, ErrorCode::Shape, "p must map V to B");
  require(s.s.source() == v && s.s.target() == v, ErrorCode::Shape, "s must be an endomorphism of V");
  require(s.i.parity() == Parity::Even || s.i.is_zero(), ErrorCode::Parity, "i must be even");
  require(s.p.parity() == Parity::Even || s.p.is_zero(), ErrorCode::Parity, "p must be even");
  require(s.s.parity() == Parity::Odd || s.s.is_zero(), ErrorCode::Parity, "s must be odd");
  require(s.big_form.has_value() == s.small_form.has_value(), ErrorCode::Input,
          "forms must be given on both complexes or neither");
  if (s.big_form) {
    require(s.big_form->space() == v && s.small_form->space() == b, ErrorCode::Space, "forms on foreign spaces");
    require(s.big_form->parity() == s.small_form->parity(), ErrorCode::Parity, "forms of different parity");
  }
}

Vector unit(std::size_t n, std::size_t k) {
  Vector e(n);
  e[k] = Rational(1);
  return e;
}

}  // namespace

bool SdrReport::ok() const {
  for (const auto& c : conditions)
    if (c && !*c) return false;
  return true;
}

const char* SdrReport::describe(int k) {
  static const char* names[] = {"d i = i d and d p = p d", "p i = id", "d s + s d = id - i p", "s i = 0 and p s = 0",
                                "s^2 = 0", "<ix,iy> = <x,y>", "ker p orthogonal to im i",
                                "<sx,y> = (-1)^|x| <x,sy>"};
  return names[k - 1];
}

SdrReport sdr_check(const SdrData& s) {
  check_shapes(s);
  const auto& dv = s.big.differential();
  const auto& db = s.small.differential();
  const auto& v = s.big.space();
  const auto& b = s.small.space();
  SdrReport r;
  auto& c = r.conditions;
  c[0] = compose(dv, s.i) == compose(s.i, db) && compose(db, s.p) == compose(s.p, dv);
  c[1] = compose(s.p, s.i) == LinearMap::identity(b);
  c[2] = commutator(dv, s.s) == LinearMap::identity(v) - compose(s.i, s.p);
  c[3] = compose(s.s, s.i).is_zero() && compose(s.p, s.s).is_zero();
  c[4] = compose(s.s, s.s).is_zero();
  if (!s.big_form) return r;

  const auto& fv = *s.big_form;
  const auto& fb = *s.small_form;
  bool six = true;
  for (std::size_t x = 0; x < b.dim() && six; ++x)
    for (std::size_t y = 0; y < b.dim() && six; ++y)
      six = fv(s.i.apply(unit(b.dim(), x)), s.i.apply(unit(b.dim(), y))) == fb.at(x, y);
  c[5] = six;

  bool seven = true;
  for (const auto& k : kernel_basis(s.p.matrix())) {
    Vector kv(v.dim());
    for (const auto& [j, x] : k) kv[j] = x;
    for (std::size_t y = 0; y < b.dim() && seven; ++y) seven = fv(kv, s.i.apply(unit(b.dim(), y))).is_zero();
  }
  c[6] = seven;

  bool eight = true;
  for (std::size_t x = 0; x < v.dim() && eight; ++x) {
    auto ex = unit(v.dim(), x);
    for (std::size_t y = 0; y < v.dim() && eight; ++y) {
      auto ey = unit(v.dim(), y);
      eight = fv(s.s.apply(ex), ey) == sign_power(bit(v.parity(x))) * fv(ex, s.s.apply(ey));
    }
  }
  c[7] = eight;
  return r;
}

SdrData sdr_repair(const SdrData& s) {
  auto report = sdr_check(s);
  for (int k : {1, 2, 3, 6, 7, 8}) {
    if (k > 5 && !s.big_form) break;
    require(report.holds(k), ErrorCode::Precondition,
            std::string("cannot repair: condition ") + std::to_string(k) + " fails (" + SdrReport::describe(k) + ")");
  }
  SdrData out = s;
  const auto& d = s.big.differential();
  if (!report.holds(4)) {
    LinearMap pi = commutator(d, out.s);
    out.s = compose(pi, compose(out.s, pi));
  }
  if (!compose(out.s, out.s).is_zero()) out.s = compose(out.s, compose(d, out.s));
  return out;
}

}  // namespace linfty

namespace linfty {

namespace {

LinearMap random_even(Sampler& rng, const GradedSpace& v) {
  LinearMap::Entries te;
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c)
      if (v.parity(r) == v.parity(c) && rng.coin()) te[{r, c}] = rng.rational();
  return LinearMap(v, v, Parity::Even, te);
}

BilinearForm transport(const BilinearForm& f, const LinearMap& ginv) {
  const auto& v = f.space();
  BilinearForm::Entries e;
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b) {
      Rational x = f(ginv.apply(unit(v.dim(), a)), ginv.apply(unit(v.dim(), b)));
      if (!x.is_zero()) e[{a, b}] = x;
    }
  return BilinearForm(v, f.parity(), e);
}

// Even t with d t - t d graded self-adjoint in the sense of condition 8.
LinearMap compatible_even(Sampler& rng, const LinearMap& d, const BilinearForm& f) {
  const auto& v = f.space();
  const std::size_t n = v.dim();
  std::vector<LinearMap> basis, units;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (v.parity(r) == v.parity(c)) {
        basis.push_back(LinearMap(v, v, Parity::Even, {{{r, c}, Rational(1)}}));
        units.push_back(compose(d, basis.back()) - compose(basis.back(), d));
      }
  SparseMatrix m(n * n, units.size());
  for (std::size_t k = 0; k < units.size(); ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        auto ex = unit(n, x), ey = unit(n, y);
        Rational c = f(units[k].apply(ex), ey) - sign_power(bit(v.parity(x))) * f(ex, units[k].apply(ey));
        if (!c.is_zero()) m.add(x * n + y, k, c);
      }
  LinearMap t = LinearMap::zero(v, v, Parity::Even);
  for (const auto& kv : kernel_basis(m)) {
    if (!rng.coin(0.7)) continue;
    Rational a = rng.rational();
    for (const auto& [j, x] : kv) t = t + basis[j] * (a * x);
  }
  return t;
}

}  // namespace

SdrData sample_retraction(Sampler& rng, const GradedSpace& v) {
  std::vector<std::size_t> evens, odds;
  for (std::size_t i = 0; i < v.dim(); ++i) (v.parity(i) == Parity::Even ? evens : odds).push_back(i);
  std::size_t pairs = rng.uniform(0, static_cast<int>(std::min(evens.size(), odds.size())));
  LinearMap::Entries d0, s0;
  std::vector<bool> paired(v.dim(), false);
  for (std::size_t k = 0; k < pairs; ++k) {
    auto [from, to] = rng.coin() ? std::pair{evens[k], odds[k]} : std::pair{odds[k], evens[k]};
    Rational lambda = rng.rational();
    d0[{to, from}] = lambda;
    s0[{from, to}] = Rational(1) / lambda;
    paired[from] = paired[to] = true;
  }
  std::vector<Generator> hb;
  LinearMap::Entries i0, p0;
  for (std::size_t j = 0; j < v.dim(); ++j) {
    if (paired[j]) continue;
    i0[{j, hb.size()}] = Rational(1);
    p0[{hb.size(), j}] = Rational(1);
    hb.push_back({"h" + v.name(j), v.parity(j)});
  }
  GradedSpace b(hb);
  LinearMap g = rng.invertible(v), gi = inverse(g);
  LinearMap d = compose(g, compose(LinearMap(v, v, Parity::Odd, d0), gi));
  LinearMap s = compose(g, compose(LinearMap(v, v, Parity::Odd, s0), gi));
  LinearMap i = compose(g, LinearMap(b, v, Parity::Even, i0));
  LinearMap p = compose(LinearMap(v, b, Parity::Even, p0), gi);
  LinearMap t = random_even(rng, v);
  s = s + compose(d, t) - compose(t, d);
  return SdrData{Complex(v, d), Complex::trivial(b), i, p, s, std::nullopt, std::nullopt};
}

SdrData sample_retraction_with_forms(Sampler& rng) {
  std::vector<Generator> basis;
  LinearMap::Entries d0, s0;
  BilinearForm::Entries f0;
  bool contract = rng.coin();
  if (contract) {
    // two contractible pairs, paired across by the form
    basis = {{"u1", Parity::Even}, {"v1", Parity::Odd}, {"u2", Parity::Even}, {"v2", Parity::Odd}};
    Rational lambda = rng.rational();
    d0 = {{{1, 0}, lambda}, {{3, 2}, -lambda}};
    s0 = {{{0, 1}, Rational(1) / lambda}, {{2, 3}, -Rational(1) / lambda}};
    f0 = {{{0, 3}, Rational(1)}, {{2, 1}, Rational(1)}};
  } else {
    int pairs = rng.uniform(1, 2);
    for (int k = 0; k < pairs; ++k) {
      basis.push_back({"h" + std::to_string(k + 1), Parity::Even});
      basis.push_back({"k" + std::to_string(k + 1), Parity::Odd});
      f0[{2 * k, 2 * k + 1}] = rng.rational();
    }
    if (rng.coin()) d0[{1, 0}] = rng.rational();
  }
  GradedSpace v(basis);
  BilinearForm form(v, Parity::Odd, f0);
  LinearMap g = rng.invertible(v), gi = inverse(g);
  LinearMap d = compose(g, compose(LinearMap(v, v, Parity::Odd, d0), gi));
  LinearMap s = compose(g, compose(LinearMap(v, v, Parity::Odd, s0), gi));
  BilinearForm big = transport(form, gi);
  LinearMap t = compatible_even(rng, d, big);
  s = s + compose(d, t) - compose(t, d);
  if (contract) {
    GradedSpace zero;
    return SdrData{Complex(v, d), Complex::trivial(zero), LinearMap::zero(zero, v, Parity::Even),
                   LinearMap::zero(v, zero, Parity::Even), s, big, BilinearForm(zero, Parity::Odd, {})};
  }
  // B is the untransported copy, included by g
  LinearMap db(v, v, Parity::Odd, d0);
  return SdrData{Complex(v, d), Complex(v, db), g, gi, s, big, form};
}

}  // namespace linfty
