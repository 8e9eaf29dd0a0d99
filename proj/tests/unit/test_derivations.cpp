#include "doctest.h"

#include "linfty/errors.hpp"
#include "linfty/random.hpp"

using namespace linfty;

namespace {

// CE derivation of [x,y] = y on the odd coordinates of the shifted dual
Derivation affine_line_field(int cutoff) {
  auto s = make_space({{"x'", Parity::Odd}, {"y'", Parity::Odd}});
  Derivation m(s, Parity::Odd, cutoff);
  m.set_value(1, TruncatedPolynomial::word(s, {0, 1}, Rational(-1), cutoff));
  return m;
}

}  // namespace

TEST_CASE("evaluation follows the graded Leibniz rule") {
  auto s = make_space({{"x", Parity::Even}, {"t", Parity::Odd}});
  const int N = 6;
  auto x = TruncatedPolynomial::generator(s, 0, N);
  auto t = TruncatedPolynomial::generator(s, 1, N);
  Derivation euler(s, Parity::Even, N);
  euler.set_value(0, x);
  CHECK(eval(euler, x * x * x) == Rational(3) * (x * x * x));
  Derivation tdt(s, Parity::Even, N);
  tdt.set_value(1, t);
  CHECK(eval(tdt, t) == t);
  CHECK(eval(tdt, x * t) == x * t);

  Sampler rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto sp = make_space(rng.space(2, 2).basis());
    Parity px = parity_of(rng.uniform(0, 1)), pf = parity_of(rng.uniform(0, 1));
    auto xi = rng.derivation(sp, px, 1, 3, N);
    auto f = rng.polynomial(sp, pf, 0, 3, N);
    auto g = rng.polynomial(sp, parity_of(rng.uniform(0, 1)), 0, 3, N);
    auto lhs = eval(xi, f * g);
    auto rhs = eval(xi, f) * g + sign_power(koszul(px, pf)) * (f * eval(xi, g));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("brackets and divergence on small examples") {
  auto s = make_space({{"x", Parity::Even}});
  const int N = 6;
  auto x = TruncatedPolynomial::generator(s, 0, N);
  Derivation dx = Derivation::coordinate(s, 0, N);
  Derivation x2dx(s, Parity::Even, N);
  x2dx.set_value(0, x * x);
  Derivation expect(s, Parity::Even, N);
  expect.set_value(0, Rational(2) * x);
  CHECK(bracket(dx, x2dx) == expect);
  CHECK(divergence(x2dx) == Rational(2) * x);

  auto o = make_space({{"t", Parity::Odd}});
  Derivation tdt(o, Parity::Even, N);
  tdt.set_value(0, TruncatedPolynomial::generator(o, 0, N));
  CHECK(divergence(tdt) == TruncatedPolynomial::constant(o, Rational(-1), N));

  CHECK(divergence(affine_line_field(N)) == TruncatedPolynomial::generator(affine_line_field(N).space(), 0, N));
}

TEST_CASE("derivation brackets satisfy graded antisymmetry and Jacobi") {
  Sampler rng(23);
  const int N = 6;
  for (int trial = 0; trial < 25; ++trial) {
    auto sp = make_space(rng.space(2, 2).basis());
    Parity pa = parity_of(rng.uniform(0, 1)), pb = parity_of(rng.uniform(0, 1)), pc = parity_of(rng.uniform(0, 1));
    auto a = rng.derivation(sp, pa, 1, 3, N, 0.3);
    auto b = rng.derivation(sp, pb, 1, 3, N, 0.3);
    auto c = rng.derivation(sp, pc, 1, 2, N, 0.3);
    CHECK(bracket(a, b) == -sign_power(koszul(pa, pb)) * bracket(b, a));
    auto lhs = bracket(a, bracket(b, c));
    auto rhs = bracket(bracket(a, b), c) + sign_power(koszul(pa, pb)) * bracket(b, bracket(a, c));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("divergence of a bracket") {
  Sampler rng(29);
  const int N = 6;
  for (int trial = 0; trial < 40; ++trial) {
    auto sp = make_space(rng.space(2, 2).basis());
    Parity pa = parity_of(rng.uniform(0, 1)), pb = parity_of(rng.uniform(0, 1));
    auto a = rng.derivation(sp, pa, 1, 4, N, 0.4);
    auto b = rng.derivation(sp, pb, 1, 4, N, 0.4);
    auto lhs = divergence(bracket(a, b));
    auto rhs = eval(a, divergence(b)) - sign_power(koszul(pa, pb)) * eval(b, divergence(a));
    REQUIRE(lhs.cutoff() >= 4);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("multilinear dictionary") {
  auto s = make_space({{"t", Parity::Even}});
  for (int n = 1; n <= 5; ++n) {
    Derivation d(s, Parity::Even, 6);
    d.set_value(0, TruncatedPolynomial::word(s, std::vector<std::uint32_t>(n, 0), Rational(1), 6));
    auto m = to_multilinear(d, n);
    CHECK(m.value(std::vector<std::uint32_t>(n, 0)).at(0) == factorial(n));
    CHECK(from_multilinear(m, 6) == d);
  }
  auto m2 = to_multilinear(affine_line_field(4), 2);
  CHECK(m2.value({0, 1}).at(1) == Rational(-1));
  CHECK(m2.value({1, 0}).at(1) == Rational(1));

  Sampler rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto sp = make_space(rng.space(2, 3).basis());
    int n = rng.uniform(1, 4);
    auto xi = rng.derivation(sp, parity_of(rng.uniform(0, 1)), n, n, 5);
    CHECK(from_multilinear(to_multilinear(xi, n), 5) == xi);
  }
}

TEST_CASE("supertrace of a slot is the symmetrized divergence") {
  CHECK(supertrace_of_slot(affine_line_field(4), {0}) == Rational(1));
  CHECK(supertrace_of_slot(affine_line_field(4), {1}) == Rational(0));
  Sampler rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    auto sp = make_space(rng.space(2, 3).basis());
    int n = rng.uniform(1, 4);
    auto xi = rng.derivation(sp, parity_of(rng.uniform(0, 1)), n, n, 6);
    auto div = divergence(xi);
    for (int k = 0; k < 5; ++k) {
      std::vector<std::uint32_t> fixed;
      for (int j = 0; j < n - 1; ++j) fixed.push_back(rng.uniform(0, static_cast<int>(sp->dim()) - 1));
      CHECK(supertrace_of_slot(xi, fixed) == evaluate_symmetric(div, fixed));
    }
  }
}

TEST_CASE("derivations reject values of the wrong parity") {
  auto s = make_space({{"x", Parity::Even}, {"t", Parity::Odd}});
  Derivation d(s, Parity::Even, 4);
  CHECK_THROWS_AS(d.set_value(0, TruncatedPolynomial::generator(s, 1, 4)), Error);
}
