#include "doctest.h"

#include "linfty/errors.hpp"
#include "linfty/poisson.hpp"
#include "linfty/random.hpp"

using namespace linfty;

namespace {

struct Sample {
  DoubleSpace dbl;
  TruncatedPolynomial f, g, h;
  Parity pf, pg, ph;
};

Sample sample(Sampler& rng, DoubleKind kind, int N) {
  auto base = make_space(rng.space(2, 2).basis());
  DoubleSpace d = make_double(base, kind);
  Parity pf = parity_of(rng.uniform(0, 1)), pg = parity_of(rng.uniform(0, 1)), ph = parity_of(rng.uniform(0, 1));
  return {d,
          rng.polynomial(d.space(), pf, 1, 3, N, 0.15),
          rng.polynomial(d.space(), pg, 1, 3, N, 0.15),
          rng.polynomial(d.space(), ph, 1, 3, N, 0.15),
          pf, pg, ph};
}

}  // namespace

TEST_CASE("brackets of linear functions") {
  auto base = make_space({{"x", Parity::Even}, {"t", Parity::Odd}});
  for (auto kind : {DoubleKind::Even, DoubleKind::Odd}) {
    DoubleSpace d = make_double(base, kind);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        auto star = TruncatedPolynomial::generator(d.space(), d.partner(i), 4);
        auto x = TruncatedPolynomial::generator(d.space(), j, 4);
        auto b = poisson_bracket(d.poisson, star, x);
        CHECK(b == TruncatedPolynomial::constant(d.space(), Rational(i == j ? 1 : 0), 4));
      }
    CHECK(d.poisson.nondegenerate());
  }
  DoubleSpace odd = make_double(base, DoubleKind::Odd);
  CHECK(odd.space()->name(3) == "Πt*");
  CHECK(odd.space()->parity(3) == Parity::Even);
}

TEST_CASE("the even bracket is a graded Lie bracket and a biderivation") {
  Sampler rng(41);
  const int N = 7;
  for (int trial = 0; trial < 30; ++trial) {
    auto s = sample(rng, DoubleKind::Even, N);
    const auto& P = s.dbl.poisson;
    CHECK(poisson_bracket(P, s.f, s.g) == -sign_power(koszul(s.pf, s.pg)) * poisson_bracket(P, s.g, s.f));
    auto lhs = poisson_bracket(P, s.f, s.g * s.h);
    auto rhs = poisson_bracket(P, s.f, s.g) * s.h + sign_power(koszul(s.pf, s.pg)) * (s.g * poisson_bracket(P, s.f, s.h));
    CHECK(lhs == rhs);
    auto j1 = poisson_bracket(P, s.f, poisson_bracket(P, s.g, s.h));
    auto j2 = poisson_bracket(P, poisson_bracket(P, s.f, s.g), s.h) +
              sign_power(koszul(s.pf, s.pg)) * poisson_bracket(P, s.g, poisson_bracket(P, s.f, s.h));
    CHECK(j1 == j2);
  }
}

TEST_CASE("the odd bracket: symmetry, Leibniz rule and Jacobi identity") {
  Sampler rng(43);
  const int N = 7;
  for (int trial = 0; trial < 30; ++trial) {
    auto s = sample(rng, DoubleKind::Odd, N);
    const auto& P = s.dbl.poisson;
    CHECK(poisson_bracket(P, s.f, s.g) == sign_power(koszul(s.pf, s.pg)) * poisson_bracket(P, s.g, s.f));
    auto lhs = poisson_bracket(P, s.f, s.g * s.h);
    auto rhs = poisson_bracket(P, s.f, s.g) * s.h +
               sign_power((bit(s.pf) + 1) * bit(s.pg)) * (s.g * poisson_bracket(P, s.f, s.h));
    CHECK(lhs == rhs);
    auto j1 = poisson_bracket(P, s.f, poisson_bracket(P, s.g, s.h));
    auto stated = sign_power(bit(s.pf) + 1) * poisson_bracket(P, poisson_bracket(P, s.f, s.g), s.h) +
                  sign_power((bit(s.pf) + 1) * (bit(s.pg) + 1)) * poisson_bracket(P, s.g, poisson_bracket(P, s.f, s.h));
    CHECK(j1 == stated);
  }
}

TEST_CASE("doubling maps") {
  Sampler rng(47);
  const int N = 6;
  for (int trial = 0; trial < 30; ++trial) {
    auto base = make_space(rng.space(2, 2).basis());
    Parity pa = parity_of(rng.uniform(0, 1)), pb = parity_of(rng.uniform(0, 1));
    auto xi = rng.derivation(base, pa, 1, 3, N, 0.3);
    auto eta = rng.derivation(base, pb, 1, 3, N, 0.3);
    auto br = bracket(xi, eta);

    DoubleSpace ev = make_double(base, DoubleKind::Even);
    CHECK(double_even(ev, br) == poisson_bracket(ev.poisson, double_even(ev, xi), double_even(ev, eta)));
    CHECK(divergence(hamiltonian_field(ev.poisson, double_even(ev, xi))).is_zero());

    DoubleSpace od = make_double(base, DoubleKind::Odd);
    CHECK(poisson_bracket(od.poisson, double_odd(od, xi), double_odd(od, eta)) ==
          sign_power(bit(pa)) * double_odd(od, br));
    auto lap = laplacian(od.poisson, double_odd(od, xi));
    CHECK(lap == laplacian_darboux(od, double_odd(od, xi)));
    CHECK(lap == od.lift(divergence(xi)));

    // the Hamiltonian field of the double restricts to xi on base functions
    auto X = hamiltonian_field(od.poisson, double_odd(od, xi));
    for (std::size_t i = 0; i < base->dim(); ++i) CHECK(X.value(i) == od.lift(xi.value(i)));
  }
}

TEST_CASE("the two Laplacians agree") {
  Sampler rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto base = make_space(rng.space(2, 2).basis());
    DoubleSpace od = make_double(base, DoubleKind::Odd);
    auto g = rng.polynomial(od.space(), parity_of(rng.uniform(0, 1)), 0, 4, 6, 0.2);
    CHECK(laplacian(od.poisson, g) == laplacian_darboux(od, g));
  }
}
