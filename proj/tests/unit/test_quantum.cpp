#include "doctest.h"

#include "linfty/errors.hpp"
#include "linfty/quantum.hpp"
#include "linfty/random.hpp"

using namespace linfty;

namespace {

struct OddDouble {
  LInftyStructure base;
  DoubleSpace dbl;
  TruncatedPolynomial s0;
};

OddDouble odd_double(const LieAlgebra& g, int cutoff) {
  auto s = from_lie(g, cutoff);
  auto dbl = make_double(s.space(), DoubleKind::Odd);
  return {s, dbl, double_odd(dbl, s.m())};
}

}  // namespace

TEST_CASE("zero and constant lifts") {
  auto d = odd_double(lie::abelian(2), 5);
  QuantumStructure zero(d.dbl.poisson, {TruncatedPolynomial(d.dbl.space(), 5)}, 5);
  CHECK(check_qme(zero).ok);
  auto lift = quantum_lift(d.dbl.poisson, TruncatedPolynomial(d.dbl.space(), 6), 2, 6);
  CHECK(lift.ok);
  for (const auto& s : lift.structure->genus()) CHECK(s.is_zero());

  auto h = odd_double(lie::heisenberg(), 6);
  CHECK(laplacian(h.dbl.poisson, h.s0).is_zero());
  CHECK(check_qme(QuantumStructure(h.dbl.poisson, {h.s0}, 6)).ok);
}

TEST_CASE("weight rule and parity are enforced") {
  auto d = odd_double(lie::heisenberg(), 5);
  auto sp = d.dbl.space();
  auto quad = TruncatedPolynomial::word(sp, {0, 3}, Rational(1), 5);
  CHECK_THROWS_AS(QuantumStructure(d.dbl.poisson, {quad}, 5), Error);
  auto one = TruncatedPolynomial::constant(sp, Rational(1), 3);
  CHECK_THROWS_AS(QuantumStructure(d.dbl.poisson, {d.s0, one}, 5), Error);
  CHECK_NOTHROW(QuantumStructure(d.dbl.poisson, {d.s0, TruncatedPolynomial(sp, 3), one}, 5));
  CHECK_THROWS_AS(QuantumStructure(d.dbl.poisson, {TruncatedPolynomial::generator(sp, 0, 5)}, 5), Error);
}

TEST_CASE("Heisenberg lifts to higher genus") {
  auto d = odd_double(lie::heisenberg(), 7);
  auto lift = quantum_lift(d.dbl.poisson, d.s0, 2, 6);
  REQUIRE(lift.ok);
  CHECK(lift.structure->genus_cutoff() == 2);
  CHECK(check_qme(*lift.structure).ok);
}

TEST_CASE("the affine line is obstructed at genus one") {
  auto d = odd_double(lie::affine_line(), 7);
  auto lift = quantum_lift(d.dbl.poisson, d.s0, 2, 6);
  CHECK_FALSE(lift.ok);
  CHECK(lift.obstructed_genus == 1);
  REQUIRE(lift.certificate.has_value());
  REQUIRE(lift.obstruction.has_value());
  Rational pairing;
  for (const auto& [m, c] : lift.certificate->terms()) pairing += c * lift.obstruction->coefficient(m);
  CHECK(!pairing.is_zero());
  CHECK(*lift.obstruction == d.dbl.lift(divergence(d.base.m())));
}

TEST_CASE("genus zero and one of a quantum structure") {
  for (const auto& g : {lie::heisenberg(), lie::sl2(), lie::abelian(2)}) {
    auto d = odd_double(g, 7);
    auto lift = quantum_lift(d.dbl.poisson, d.s0, 1, 5);
    REQUIRE(lift.ok);
    const auto& q = *lift.structure;
    auto x = hamiltonian_field(q.poisson(), q.at(0));
    LInftyStructure classical(q.space(), Derivation(q.space(), Parity::Odd, x.cutoff()), x);
    CHECK(check_mc(classical).ok);
    CHECK(check_unimodular({classical, q.at(1)}).ok);
    // Delta S_0 is a cocycle
    CHECK(eval(x, laplacian(q.poisson(), q.at(0))).is_zero());
  }
}

TEST_CASE("the Laplacian anticommutes with a compatible differential") {
  Sampler rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    auto base = make_space(rng.space(2, 2, 2).basis());
    auto dbl = make_double(base, DoubleKind::Odd);
    auto d0 = Derivation::linear(base, rng.square_zero(*base), 6);
    auto d = hamiltonian_field(dbl.poisson, double_odd(dbl, d0));
    CHECK(preserves_poisson(d, dbl.poisson));
    auto f = rng.polynomial(dbl.space(), parity_of(rng.uniform(0, 1)), 0, 4, 6, 0.3);
    auto lhs = laplacian(dbl.poisson, eval(d, f)) + eval(d, laplacian(dbl.poisson, f));
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("Hamiltonians of structures") {
  Sampler rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    auto base = make_space(rng.space(2, 2).basis());
    auto dbl = make_double(base, DoubleKind::Odd);
    auto h = rng.polynomial(dbl.space(), Parity::Even, 3, 3, 5, 0.3);
    auto x = hamiltonian_field(dbl.poisson, h);
    auto back = hamiltonian_of_structure(x, dbl.poisson);
    CHECK(truncate(back, 3) == truncate(h, 3));
  }
  auto d = odd_double(lie::affine_line(), 5);
  auto x = hamiltonian_field(d.dbl.poisson, d.s0);
  CHECK(hamiltonian_of_structure(x, cyclic_from_poisson(d.dbl.poisson)) == truncate(d.s0, x.cutoff() + 1));
  CHECK(hamiltonian_of_structure(Derivation(d.dbl.space(), Parity::Odd, 4), d.dbl.poisson).is_zero());
  // a structure that does not preserve the bracket has no Hamiltonian
  auto lifted = Derivation(d.dbl.space(), Parity::Odd, 4);
  lifted.set_value(0, TruncatedPolynomial::word(d.dbl.space(), {0, 1}, Rational(1), 4));
  CHECK_THROWS_AS(hamiltonian_of_structure(lifted, d.dbl.poisson), Error);
}
