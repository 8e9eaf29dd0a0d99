#include "doctest.h"

#include "linfty/errors.hpp"
#include "linfty/random.hpp"
#include "linfty/unimodular.hpp"

using namespace linfty;

namespace {

SemidirectElement random_element(Sampler& rng, const SpacePtr& s, Parity p, int N) {
  return SemidirectElement(rng.derivation(s, p, 2, 3, N, 0.2), rng.polynomial(s, flip(p), 1, 3, N, 0.2));
}

bool equal(const SemidirectElement& a, const SemidirectElement& b) { return a.xi == b.xi && a.f == b.f; }

}  // namespace

TEST_CASE("the semidirect algebra is a dgla with the external differential") {
  Sampler rng(67);
  const int N = 5;
  for (int trial = 0; trial < 50; ++trial) {
    auto s = make_space(rng.space(2, 2, 2).basis());
    auto d = Derivation::linear(s, rng.square_zero(*s), N);
    Parity pa = parity_of(rng.uniform(0, 1)), pb = parity_of(rng.uniform(0, 1)), pc = parity_of(rng.uniform(0, 1));
    auto a = random_element(rng, s, pa, N), b = random_element(rng, s, pb, N), c = random_element(rng, s, pc, N);

    CHECK(total_differential(d, total_differential(d, a)).is_zero());

    auto lhs = total_differential(d, semidirect_bracket(a, b));
    auto rhs = semidirect_bracket(total_differential(d, a), b) +
               sign_power(bit(pa)) * semidirect_bracket(a, total_differential(d, b));
    CHECK(equal(lhs, rhs));

    auto ab = semidirect_bracket(a, b);
    CHECK(equal(ab, Rational(-sign_power(koszul(pa, pb))) * semidirect_bracket(b, a)));
    auto j1 = semidirect_bracket(a, semidirect_bracket(b, c));
    auto j2 = semidirect_bracket(ab, c) + sign_power(koszul(pa, pb)) * semidirect_bracket(b, semidirect_bracket(a, c));
    CHECK(equal(j1, j2));
  }
}

TEST_CASE("external differential") {
  auto aff = from_lie(lie::affine_line(), 5);
  auto e = external_differential(aff.m());
  CHECK(e.xi.is_zero());
  CHECK(e.f == Rational(1, 2) * TruncatedPolynomial::generator(aff.space(), 0, 4));
  CHECK(external_differential(from_lie(lie::heisenberg(), 5).m()).is_zero());
  CHECK_THROWS_AS(external_differential(Derivation::coordinate(aff.space(), 0, 4)), Error);
}

TEST_CASE("unimodular pairs are Maurer-Cartan elements of the semidirect algebra") {
  for (const auto& g : {lie::heisenberg(), lie::sl2(), lie::abelian(2)}) {
    auto s = from_lie(g, 5);
    auto ob = obstruction_class(s);
    REQUIRE(ob.vanishes);
    UnimodularStructure u{s, *ob.lift};
    CHECK(check_unimodular(u).ok);
    SemidirectElement x(s.m(), -*ob.lift);
    auto mc = total_differential(s.d(), x) + Rational(1, 2) * semidirect_bracket(x, x);
    CHECK(mc.is_zero());
  }
}

TEST_CASE("check_unimodular") {
  auto heis = from_lie(lie::heisenberg(), 5);
  auto zero = TruncatedPolynomial(heis.space(), 5);
  auto r = check_unimodular({heis, zero});
  CHECK(r.ok);
  CHECK(r.strict);

  auto ab = from_lie(lie::abelian(2), 5);
  Sampler rng(71);
  for (int i = 0; i < 10; ++i) CHECK(check_unimodular({ab, rng.polynomial(ab.space(), Parity::Even, 1, 4, 5)}).ok);

  auto aff = from_lie(lie::affine_line(), 6);
  for (int i = 0; i < 10; ++i) {
    auto rep = check_unimodular({aff, rng.polynomial(aff.space(), Parity::Even, 1, 2, 6)});
    CHECK_FALSE(rep.ok);
    CHECK(rep.residual.count(1) == 1);
  }
  CHECK_THROWS_AS(check_unimodular({aff, TruncatedPolynomial::generator(aff.space(), 0, 4)}), Error);
}

TEST_CASE("obstruction class and the trace criterion agree on Lie algebras") {
  for (const auto& g : {lie::abelian(3), lie::heisenberg(), lie::affine_line(), lie::sl2()}) {
    auto ob = obstruction_class(from_lie(g, 4));
    CHECK(ob.vanishes == lie_unimodular(g));
  }
  CHECK_FALSE(lie_unimodular(lie::affine_line()));
  auto ob = obstruction_class(from_lie(lie::affine_line(), 4));
  CHECK(ob.cocycle.str() == "x'");
  CHECK(ob.obstructed_at == 1);
  REQUIRE(ob.certificate.has_value());
  CHECK(ob.certificate->coefficient({0}) != Rational(0));

  GradedSpace v({{"x", Parity::Even}, {"y", Parity::Even}, {"z", Parity::Even}});
  LieAlgebra bad(v, {{{0, 1}, {{0, Rational(1)}}}, {{1, 2}, {{1, Rational(1)}}}, {{2, 0}, {{0, Rational(1)}}}});
  CHECK_THROWS_AS(lie_unimodular(bad), Error);
}

TEST_CASE("surjectivity of the divergence") {
  auto two = classify_dimension(GradedSpace({{"a", Parity::Even}, {"b", Parity::Even}}), 4);
  CHECK(two.expected == DimensionClass::Exceptional);
  CHECK(two.observed == DimensionClass::Exceptional);
  CHECK(two.cokernel_dim == 1);
  REQUIRE(two.missed.size() == 1);
  CHECK(two.missed[0] == Monomial{0, 1});
  CHECK(*two.top == Monomial{0, 1});

  auto mixed = classify_dimension(GradedSpace({{"a", Parity::Even}, {"b", Parity::Odd}}), 4);
  CHECK(mixed.expected == DimensionClass::Surjective);
  CHECK(mixed.observed == DimensionClass::Surjective);
  CHECK(mixed.missed.empty());

  auto line = classify_dimension(GradedSpace({{"b", Parity::Odd}}), 4);
  CHECK(line.observed == DimensionClass::Surjective);
  auto three = classify_dimension(GradedSpace({{"a", Parity::Even}, {"b", Parity::Even}, {"c", Parity::Even}}), 4);
  CHECK(three.expected == DimensionClass::Surjective);
  CHECK(three.observed == DimensionClass::Surjective);
  CHECK(three.missed == std::vector<Monomial>{{0, 1, 2}});
  CHECK(three.even_cokernel_dim == 0);
}
