#include "doctest.h"

#include "linfty/errors.hpp"
#include "linfty/linear_map.hpp"
#include "linfty/random.hpp"

using namespace linfty;

namespace {

GradedSpace even2() { return GradedSpace({{"x", Parity::Even}, {"y", Parity::Even}}); }

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK((Rational::parse("1/2") + Rational::parse("1/3")).str() == "5/6");
  CHECK(Rational::parse("-4/6").str() == "-2/3");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("+3/9").str() == "1/3");
  for (const char* bad : {"1/0", "", "1/", "/2", "a", "1/-2", "1.5", "1/2/3"}) {
    try {
      Rational::parse(bad);
      FAIL("accepted ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Rational);
    }
  }
  CHECK(factorial(5) == Rational(120));
}

TEST_CASE("supertrace") {
  // ad(x) for [x,y] = y
  LinearMap ad_x(even2(), even2(), Parity::Even, {{{1, 1}, Rational(1)}});
  CHECK(supertrace(ad_x) == Rational(1));
  GradedSpace s11({{"e", Parity::Even}, {"o", Parity::Odd}});
  CHECK(supertrace(LinearMap::identity(s11)) == Rational(0));
  CHECK(supertrace(LinearMap::identity(parity_reverse(even2()))) == Rational(-2));
}

TEST_CASE("supertrace is cyclic on graded commutators") {
  Sampler rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    GradedSpace v = rng.space(3, 3);
    for (Parity pa : {Parity::Even, Parity::Odd})
      for (Parity pb : {Parity::Even, Parity::Odd}) {
        LinearMap::Entries ea, eb;
        for (std::size_t i = 0; i < v.dim(); ++i)
          for (std::size_t j = 0; j < v.dim(); ++j) {
            if (v.parity(i) == v.parity(j) + pa && rng.coin()) ea[{i, j}] = rng.rational();
            if (v.parity(i) == v.parity(j) + pb && rng.coin()) eb[{i, j}] = rng.rational();
          }
        LinearMap a(v, v, pa, ea), b(v, v, pb, eb);
        CHECK(supertrace(commutator(a, b)).is_zero());
      }
  }
}

TEST_CASE("linear maps reject entries of the wrong parity") {
  GradedSpace s11({{"e", Parity::Even}, {"o", Parity::Odd}});
  CHECK_THROWS_AS(LinearMap(s11, s11, Parity::Even, {{{0, 1}, Rational(1)}}), Error);
  CHECK_NOTHROW(LinearMap(s11, s11, Parity::Odd, {{{0, 1}, Rational(1)}}));
}

TEST_CASE("bilinear forms") {
  GradedSpace s({{"e", Parity::Even}, {"o1", Parity::Odd}, {"o2", Parity::Odd}});
  BilinearForm f(s, Parity::Even, {{{0, 0}, Rational(1)}, {{1, 2}, Rational(1)}});
  CHECK(f.at(2, 1) == Rational(-1));
  CHECK(f.nondegenerate());
  CHECK_THROWS_AS(BilinearForm(s, Parity::Even, {{{1, 2}, Rational(1)}, {{2, 1}, Rational(1)}}), Error);
  CHECK_THROWS_AS(BilinearForm(s, Parity::Odd, {{{0, 0}, Rational(1)}}), Error);
  LinearMap dual = form_dual(f);
  CHECK(dual.target().name(0) == "e*");
  CHECK(dual.at(2, 1) == Rational(1));
  BilinearForm degenerate(s, Parity::Even, {{{0, 0}, Rational(1)}});
  CHECK_FALSE(degenerate.nondegenerate());
  CHECK_THROWS_AS(form_dual(degenerate), Error);
}

TEST_CASE("complexes and parity reversal") {
  GradedSpace s({{"a", Parity::Even}, {"b", Parity::Odd}});
  CHECK_NOTHROW(Complex(s, LinearMap(s, s, Parity::Odd, {{{1, 0}, Rational(1)}})));
  CHECK_THROWS_AS(Complex(s, LinearMap(s, s, Parity::Odd, {{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}})),
                  Error);
  GradedSpace r = parity_reverse(s);
  CHECK(r.parity(0) == Parity::Odd);
  CHECK(r.name(1) == "Πb");
  CHECK(r.dim_label() == "1|1");
}

TEST_CASE("sampled square-zero maps") {
  Sampler rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    GradedSpace v = rng.space(3, 3);
    LinearMap d = rng.square_zero(v);
    CHECK(compose(d, d).is_zero());
    CHECK(supertrace(d).is_zero());
  }
}

TEST_CASE("exact solver returns solutions or certificates") {
  SparseMatrix a(3, 2);
  a.add(0, 0, Rational(1));
  a.add(1, 1, Rational(2));
  a.add(2, 0, Rational(1));
  a.add(2, 1, Rational(1));
  auto ok = solve(a, {{0, Rational(1)}, {1, Rational(4)}, {2, Rational(3)}});
  REQUIRE(ok.solvable);
  CHECK(ok.solution[0] == Rational(1));
  CHECK(ok.solution[1] == Rational(2));
  SparseVector b{{0, Rational(1)}, {1, Rational(4)}, {2, Rational(5)}};
  auto bad = solve(a, b);
  REQUIRE_FALSE(bad.solvable);
  CHECK(a.apply_transpose(bad.certificate).empty());
  CHECK_FALSE(dot(bad.certificate, b).is_zero());
  auto k = kernel_basis(a.transpose());
  REQUIRE(k.size() == 1);
  CHECK(a.apply_transpose(k[0]).empty());
}
