#include "doctest.h"

#include "linfty/errors.hpp"
#include "linfty/random.hpp"
#include "linfty/sdr.hpp"

using namespace linfty;

namespace {

void check_conditions(const SdrReport& r, int upto) {
  for (int k = 1; k <= upto; ++k) {
    CAPTURE(k);
    CHECK(r.holds(k));
  }
}

}  // namespace

TEST_CASE("identity retraction") {
  GradedSpace v({{"u", Parity::Even}, {"v", Parity::Odd}, {"w", Parity::Even}});
  LinearMap d(v, v, Parity::Odd, {{{1, 0}, Rational(1)}});
  auto id = LinearMap::identity(v);
  SdrData s{Complex(v, d), Complex(v, d), id, id, LinearMap::zero(v, v, Parity::Odd), std::nullopt, std::nullopt};
  auto r = sdr_check(s);
  check_conditions(r, 5);
  CHECK_FALSE(r.conditions[5].has_value());
  CHECK(r.ok());

  BilinearForm form(v, Parity::Even, {{{0, 0}, Rational(1)}, {{2, 2}, Rational(-2)}});
  s.big_form = s.small_form = form;
  r = sdr_check(s);
  check_conditions(r, 8);
  CHECK(r.ok());
}

TEST_CASE("acyclic two-term complex") {
  GradedSpace v({{"u", Parity::Even}, {"v", Parity::Odd}});
  GradedSpace zero;
  LinearMap d(v, v, Parity::Odd, {{{1, 0}, Rational(3)}});
  LinearMap s(v, v, Parity::Odd, {{{0, 1}, Rational(1, 3)}});
  SdrData sdr{Complex(v, d), Complex::trivial(zero), LinearMap::zero(zero, v, Parity::Even),
              LinearMap::zero(v, zero, Parity::Even), s, std::nullopt, std::nullopt};
  auto r = sdr_check(sdr);
  check_conditions(r, 5);
  sdr.s = s * Rational(2);
  r = sdr_check(sdr);
  CHECK_FALSE(r.holds(3));
  CHECK_THROWS_AS(sdr_repair(sdr), Error);
}

TEST_CASE("side conditions are repaired") {
  // V = <h, a, b> with da = b retracting onto <h>; s h = b breaks s i = 0
  GradedSpace v({{"h", Parity::Even}, {"a", Parity::Even}, {"b", Parity::Odd}});
  GradedSpace bs({{"h", Parity::Even}});
  LinearMap d(v, v, Parity::Odd, {{{2, 1}, Rational(1)}});
  LinearMap i(bs, v, Parity::Even, {{{0, 0}, Rational(1)}});
  LinearMap p(v, bs, Parity::Even, {{{0, 0}, Rational(1)}});
  LinearMap s(v, v, Parity::Odd, {{{1, 2}, Rational(1)}, {{2, 0}, Rational(1)}});
  SdrData sdr{Complex(v, d), Complex::trivial(bs), i, p, s, std::nullopt, std::nullopt};
  auto r = sdr_check(sdr);
  check_conditions(r, 3);
  CHECK_FALSE(r.holds(4));
  CHECK_FALSE(r.ok());

  auto fixed = sdr_repair(sdr);
  check_conditions(sdr_check(fixed), 5);
  CHECK(fixed.i == i);
  CHECK(fixed.p == p);

  auto again = sdr_repair(fixed);
  CHECK(again.s == fixed.s);
}

TEST_CASE("forms") {
  // odd form <u1,v2> = <u2,v1> = 1, contracted completely
  GradedSpace v({{"u1", Parity::Even}, {"v1", Parity::Odd}, {"u2", Parity::Even}, {"v2", Parity::Odd}});
  GradedSpace zero;
  BilinearForm fv(v, Parity::Odd, {{{0, 3}, Rational(1)}, {{2, 1}, Rational(1)}});
  BilinearForm fb(zero, Parity::Odd, {});
  LinearMap d(v, v, Parity::Odd, {{{1, 0}, Rational(1)}, {{3, 2}, Rational(-1)}});
  LinearMap s(v, v, Parity::Odd, {{{0, 1}, Rational(1)}, {{2, 3}, Rational(-1)}});
  SdrData sdr{Complex(v, d), Complex::trivial(zero), LinearMap::zero(zero, v, Parity::Even),
              LinearMap::zero(v, zero, Parity::Even), s, fv, fb};
  check_conditions(sdr_check(sdr), 8);

  sdr.s = LinearMap(v, v, Parity::Odd, {{{0, 1}, Rational(1)}, {{2, 3}, Rational(1)}});
  auto r = sdr_check(sdr);
  CHECK_FALSE(r.holds(3));
  CHECK_FALSE(r.holds(8));

  // a retraction onto <u2, v2> whose kernel is not orthogonal to the image
  GradedSpace half({{"u2", Parity::Even}, {"v2", Parity::Odd}});
  LinearMap i(half, v, Parity::Even, {{{2, 0}, Rational(1)}, {{3, 1}, Rational(1)}});
  LinearMap p(v, half, Parity::Even, {{{0, 2}, Rational(1)}, {{1, 3}, Rational(1)}});
  LinearMap d2(v, v, Parity::Odd, {{{1, 0}, Rational(1)}});
  LinearMap s2(v, v, Parity::Odd, {{{0, 1}, Rational(1)}});
  BilinearForm fh(half, Parity::Odd, {{{0, 1}, Rational(1)}});
  SdrData bad{Complex(v, d2), Complex::trivial(half), i, p, s2, fv, fh};
  r = sdr_check(bad);
  check_conditions(r, 5);
  CHECK_FALSE(r.holds(6));
  CHECK_FALSE(r.holds(7));
  CHECK_THROWS_AS(sdr_repair(bad), Error);
}

TEST_CASE("random retractions are repaired") {
  Sampler rng(2024);
  int broken = 0;
  for (int trial = 0; trial < 20; ++trial) {
    int evens = rng.uniform(1, 3);
    std::vector<Generator> basis;
    for (int k = 0; k < 4; ++k) basis.push_back({"e" + std::to_string(k), k < evens ? Parity::Even : Parity::Odd});
    auto sdr = sample_retraction(rng, GradedSpace(basis));
    auto r = sdr_check(sdr);
    check_conditions(r, 3);
    broken += !r.ok();
    check_conditions(sdr_check(sdr_repair(sdr)), 5);
  }
  CHECK(broken > 5);
}

TEST_CASE("random retractions with forms are repaired") {
  Sampler rng(77);
  int broken = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto sdr = sample_retraction_with_forms(rng);
    auto r = sdr_check(sdr);
    for (int k : {1, 2, 3, 6, 7, 8}) {
      CAPTURE(k);
      CHECK(r.holds(k));
    }
    broken += !r.ok();
    check_conditions(sdr_check(sdr_repair(sdr)), 8);
  }
  CHECK(broken > 5);
}
