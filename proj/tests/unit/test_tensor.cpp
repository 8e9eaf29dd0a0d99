#include "doctest.h"

#include <cstdlib>

#include "linfty/errors.hpp"
#include "linfty/random.hpp"
#include "linfty/tensor.hpp"
#include "linfty/unimodular.hpp"

using namespace linfty;

namespace {

LieAlgebra gl11() {
  GradedSpace v({{"h", Parity::Even}, {"c", Parity::Even}, {"a", Parity::Odd}, {"b", Parity::Odd}});
  return LieAlgebra(v, {{{0, 2}, {{2, Rational(1)}}}, {{0, 3}, {{3, Rational(-1)}}}, {{2, 3}, {{1, Rational(1)}}}});
}

// 1, theta, x, theta x with d(theta) = x and x^2 = 0
Cdga dg_algebra() {
  GradedSpace s({{"1", Parity::Even}, {"θ", Parity::Odd}, {"x", Parity::Even}, {"θx", Parity::Odd}});
  Cdga::Products p{{{0, 0}, {{0, Rational(1)}}}, {{0, 1}, {{1, Rational(1)}}}, {{0, 2}, {{2, Rational(1)}}},
                   {{0, 3}, {{3, Rational(1)}}}, {{1, 2}, {{3, Rational(1)}}}};
  return Cdga(s, p, LinearMap(s, s, Parity::Odd, {{{2, 1}, Rational(1)}}), 0);
}

// k x k, or Lambda(t1) x Lambda(t2) when odd is set
Cdga product_algebra(bool odd) {
  if (!odd) {
    GradedSpace s({{"e1", Parity::Even}, {"e2", Parity::Even}});
    return Cdga(s, {{{0, 0}, {{0, Rational(1)}}}, {{1, 1}, {{1, Rational(1)}}}});
  }
  GradedSpace s({{"e1", Parity::Even}, {"e2", Parity::Even}, {"t1", Parity::Odd}, {"t2", Parity::Odd}});
  return Cdga(s, {{{0, 0}, {{0, Rational(1)}}}, {{1, 1}, {{1, Rational(1)}}}, {{0, 2}, {{2, Rational(1)}}},
                  {{1, 3}, {{3, Rational(1)}}}});
}

}  // namespace

TEST_CASE("Frobenius catalog") {
  CHECK(frobenius::point().euler_characteristic() == Rational(1));
  CHECK(frobenius::sphere2().euler_characteristic() == Rational(2));
  CHECK(frobenius::circle().euler_characteristic() == Rational(0));
  CHECK(frobenius::torus().euler_characteristic() == Rational(0));
  CHECK(frobenius::circle().pairing()->parity() == Parity::Odd);
  CHECK(frobenius::sphere3().pairing()->parity() == Parity::Odd);
  CHECK(frobenius::sphere2().pairing()->parity() == Parity::Even);
  CHECK(frobenius::torus().pairing()->nondegenerate());
  for (const auto& name : frobenius::names()) {
    auto a = frobenius::by_name(name);
    CHECK(cdga_unimodular(a) == a.euler_characteristic().is_zero());
    CHECK(idempotent_criterion(a, {{{0, Rational(1)}}}) == cdga_unimodular(a));
  }
  CHECK(frobenius::by_name("k").space().dim() == 1);
  CHECK_THROWS_AS(frobenius::by_name("H_S7"), Error);
}

TEST_CASE("idempotents") {
  auto kk = product_algebra(false);
  CHECK_FALSE(cdga_unimodular(kk));
  CHECK_THROWS_AS(idempotent_criterion(kk, {{{0, Rational(1)}}}), Error);  // no unit
  GradedSpace s({{"1", Parity::Even}, {"e", Parity::Even}, {"t", Parity::Odd}, {"et", Parity::Odd}});
  // Lambda(t) x Lambda(t) written with unit 1 and idempotent e
  Cdga a(s, {{{0, 0}, {{0, Rational(1)}}}, {{0, 1}, {{1, Rational(1)}}}, {{0, 2}, {{2, Rational(1)}}},
             {{0, 3}, {{3, Rational(1)}}}, {{1, 1}, {{1, Rational(1)}}}, {{1, 2}, {{3, Rational(1)}}},
             {{1, 3}, {{3, Rational(1)}}}},
         std::nullopt, 0);
  CHECK(cdga_unimodular(a));
  SparseVector e{{1, Rational(1)}}, f{{0, Rational(1)}, {1, Rational(-1)}};
  CHECK(idempotent_criterion(a, {e, f}));
  CHECK_THROWS_AS(idempotent_criterion(a, {e, e}), Error);
  CHECK(cdga_unimodular(product_algebra(true)));
}

TEST_CASE("cdga axioms are checked") {
  GradedSpace s({{"1", Parity::Even}, {"t", Parity::Odd}});
  CHECK_THROWS_AS(Cdga(s, {{{1, 1}, {{0, Rational(1)}}}}), Error);  // t^2 = 1 is not graded commutative
  GradedSpace ab({{"a", Parity::Even}, {"b", Parity::Even}});
  CHECK_THROWS_AS(Cdga(ab, {{{0, 0}, {{1, Rational(1)}}}, {{1, 1}, {{0, Rational(1)}}}}), Error);  // (aa)b != a(ab)
  GradedSpace w({{"1", Parity::Even}, {"w", Parity::Even}});
  Cdga::Products dual{{{0, 0}, {{0, Rational(1)}}}, {{0, 1}, {{1, Rational(1)}}}};
  CHECK_THROWS_AS(Cdga(w, dual, std::nullopt, 1), Error);  // w is not a unit
  CHECK_THROWS_AS(Cdga(w, dual, std::nullopt, 0, BilinearForm(w, Parity::Even, {{{1, 1}, Rational(1)}})),
                  Error);  // [1 w, w] = 1 but [1, w w] = 0
  CHECK_THROWS_AS(Cdga(s, {{{0, 0}, {{0, Rational(1)}}}, {{0, 1}, {{1, Rational(1)}}}},
                       LinearMap(s, s, Parity::Odd, {{{1, 0}, Rational(1)}})),
                  Error);  // d(1) = t breaks the Leibniz rule
  CHECK_NOTHROW(dg_algebra());
}

TEST_CASE("tensoring with the ground field") {
  auto s = from_lie(lie::sl2(), 4);
  auto t = tensor_linfty(frobenius::point(), s);
  for (std::size_t i = 0; i < s.space()->dim(); ++i) {
    CHECK(t.space()->parity(i) == s.space()->parity(i));
    CHECK(t.m().value(i).terms() == s.m().value(i).terms());
  }
}

TEST_CASE("the exterior algebra on one generator gives the square-zero extension") {
  auto t = tensor_linfty(frobenius::circle(), from_lie(lie::affine_line(), 3));
  GradedSpace v({{"x", Parity::Even}, {"y", Parity::Even}, {"θx", Parity::Odd}, {"θy", Parity::Odd}});
  LieAlgebra ext(v, {{{0, 1}, {{1, Rational(1)}}}, {{0, 3}, {{3, Rational(1)}}}, {{2, 1}, {{3, Rational(1)}}}});
  auto e = from_lie(ext, 3);
  for (std::size_t i = 0; i < 4; ++i) CHECK(t.m().value(i).terms() == e.m().value(i).terms());
}

TEST_CASE("Psi is a map of dglas compatible with divergence") {
  auto gens = make_space({{"u", Parity::Odd}, {"v", Parity::Even}, {"w", Parity::Odd}});
  SymMultiMap m1(gens, 1, Parity::Odd);
  m1.set({1}, {{0, Rational(1)}});
  SymMultiMap m3(gens, 3, Parity::Odd);
  m3.set({1, 1, 1}, {{2, Rational(1)}});
  std::vector<LInftyStructure> structures{from_lie(gl11(), 4), from_lie(lie::sl2(), 4), from_lie(lie::affine_line(), 4),
                                          from_brackets(gens, {m1, m3}, 4)};
  std::vector<Cdga> algebras{frobenius::point(), frobenius::circle(), frobenius::sphere2(), frobenius::torus(),
                             dg_algebra()};
  for (const auto& a : algebras)
    for (const auto& s : structures) {
      auto t = tensor_linfty(a, s);
      CHECK(check_mc(t).ok);
      CHECK(divergence(t.m()) == psi_prime(a, divergence(s.m()), t.space()));
    }

  Sampler rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    auto sp = make_space(rng.space(2, 2).basis());
    const auto& a = algebras[1 + trial % 3];
    auto target = tensor_space(a, *sp);
    Parity p1 = parity_of(rng.uniform(0, 1)), p2 = parity_of(rng.uniform(0, 1));
    auto x = rng.derivation(sp, p1, 2, 3, 4, 0.3), y = rng.derivation(sp, p2, 2, 3, 4, 0.3);
    CHECK(psi(a, bracket(x, y), target) == bracket(psi(a, x, target), psi(a, y, target)));
    CHECK(divergence(psi(a, x, target)) == psi_prime(a, divergence(x), target));
  }
}

TEST_CASE("Psi' vanishes for unimodular algebras") {
  Sampler rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    auto sp = make_space(rng.space(2, 2).basis());
    auto f = rng.polynomial(sp, parity_of(rng.uniform(0, 1)), 1, 4, 4, 0.5);
    CHECK(psi_prime(frobenius::circle(), f, tensor_space(frobenius::circle(), *sp)).is_zero());
    CHECK(psi_prime(frobenius::torus(), f, tensor_space(frobenius::torus(), *sp)).is_zero());
    CHECK(psi_prime(frobenius::point(), f, tensor_space(frobenius::point(), *sp)).terms() == f.terms());
  }
}

TEST_CASE("tensor products of cyclic structures are cyclic") {
  auto sl = from_lie(lie::sl2(), 4);
  CyclicData c(BilinearForm(lie::sl2().space(), Parity::Even, {{{0, 0}, Rational(2)}, {{1, 2}, Rational(1)}}));
  auto aff = from_lie(lie::affine_line(), 4);
  auto od = make_double(aff.space(), DoubleKind::Odd);
  auto x = hamiltonian_field(od.poisson, double_odd(od, aff.m()));
  LInftyStructure dod(od.space(), Derivation(od.space(), Parity::Odd, x.cutoff()), x);
  auto cod = cyclic_from_poisson(od.poisson);
  for (const auto& name : frobenius::names()) {
    auto a = frobenius::by_name(name);
    auto t1 = tensor_pairing(a, c);
    CHECK(t1.parity() == a.pairing()->parity());
    CHECK(check_cyclic(tensor_linfty(a, sl), t1).ok);
    auto t2 = tensor_pairing(a, cod);
    CHECK(t2.parity() == flip(a.pairing()->parity()));
    CHECK(check_cyclic(tensor_linfty(a, dod), t2).ok);
  }
  GradedSpace w({{"1", Parity::Even}, {"w", Parity::Even}});
  Cdga degenerate(w, {{{0, 0}, {{0, Rational(1)}}}, {{0, 1}, {{1, Rational(1)}}}}, std::nullopt, 0,
                  BilinearForm(w, Parity::Even, {{{0, 0}, Rational(1)}}));
  CHECK_THROWS_AS(tensor_pairing(degenerate, c), Error);
}

TEST_CASE("strict unimodularity of tensor products") {
  for (const auto& g : {lie::abelian(2), lie::heisenberg(), lie::affine_line()}) {
    auto s = from_lie(g, 4);
    for (const auto& a : {frobenius::point(), frobenius::circle(), frobenius::sphere2()}) {
      auto t = tensor_linfty(a, s);
      bool strict = divergence(t.m()).is_zero();
      CHECK(strict == (cdga_unimodular(a) || divergence(s.m()).is_zero()));
      CHECK(obstruction_class(t).vanishes == (cdga_unimodular(a) || obstruction_class(s).vanishes));
    }
  }
}

TEST_CASE("dimension cap") {
  setenv("LINFTY_MAX_DIM", "4", 1);
  CHECK_THROWS_AS(tensor_space(frobenius::torus(), GradedSpace({{"x", Parity::Even}, {"y", Parity::Odd}})), Error);
  CHECK_NOTHROW(tensor_space(frobenius::circle(), GradedSpace({{"x", Parity::Even}, {"y", Parity::Odd}})));
  setenv("LINFTY_MAX_DIM", "many", 1);
  CHECK_THROWS_AS(tensor_dimension_cap(), Error);
  unsetenv("LINFTY_MAX_DIM");
  CHECK(tensor_dimension_cap() == 64);
}
