#include "doctest.h"

#include "linfty/errors.hpp"
#include "linfty/random.hpp"

using namespace linfty;

TEST_CASE("normal forms carry Koszul signs") {
  GradedSpace s({{"t1", Parity::Odd}, {"t2", Parity::Odd}, {"x", Parity::Even}});
  auto n = normalize(s, {1, 0});
  CHECK(n.sign == -1);
  CHECK(n.monomial == Monomial{0, 1});
  CHECK(normalize(s, {0, 0}).sign == 0);
  CHECK(normalize(s, {2, 1, 2, 0}).sign == -1);
  CHECK(normalize(s, {2, 2}).monomial == Monomial{2, 2});
}

TEST_CASE("products and weight components") {
  auto s = make_space({{"x", Parity::Even}});
  auto one = TruncatedPolynomial::constant(s, Rational(1), 3);
  auto x = TruncatedPolynomial::generator(s, 0, 3);
  auto p = (one + x) * (one - x);
  CHECK(p.str() == "1 - x*x");
  CHECK(weight_component(p, 2).str() == "-x*x");
  CHECK_THROWS_AS(weight_component(p, 4), Error);
  auto big = x * x * x * x;
  CHECK(big.is_zero());
  CHECK(big.cutoff() == 3);
}

TEST_CASE("monomial enumeration counts") {
  GradedSpace s({{"x", Parity::Even}, {"y", Parity::Even}, {"t", Parity::Odd}, {"u", Parity::Odd}});
  // weight w: sum_j C(2,j) (w-j+1)
  CHECK(monomials_of_weight(s, 0).size() == 1);
  CHECK(monomials_of_weight(s, 1).size() == 4);
  CHECK(monomials_of_weight(s, 2).size() == 3 + 2 * 2 + 1);
  CHECK(monomials_of_weight(s, 4).size() == 5 + 2 * 4 + 3);
  auto ms = monomials_of_weight(s, 3);
  CHECK(std::is_sorted(ms.begin(), ms.end(), MonomialLess{}));
}

TEST_CASE("the algebra is graded commutative and associative") {
  Sampler rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = make_space(rng.space(2, 3).basis());
    Parity pa = parity_of(rng.uniform(0, 1)), pb = parity_of(rng.uniform(0, 1));
    auto a = rng.polynomial(s, pa, 0, 3, 5);
    auto b = rng.polynomial(s, pb, 0, 3, 5);
    auto c = rng.polynomial(s, Parity::Even, 0, 2, 5);
    CHECK(a * b == sign_power(koszul(pa, pb)) * (b * a));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("partial derivatives are derivations of their parity") {
  Sampler rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = make_space(rng.space(2, 3).basis());
    std::size_t i = rng.uniform(0, static_cast<int>(s->dim()) - 1);
    Parity pf = parity_of(rng.uniform(0, 1));
    auto f = rng.polynomial(s, pf, 0, 3, 6);
    auto g = rng.polynomial(s, parity_of(rng.uniform(0, 1)), 0, 3, 6);
    auto lhs = partial(f * g, i);
    auto rhs = partial(f, i) * g + sign_power(koszul(s->parity(i), pf)) * (f * partial(g, i));
    CHECK(lhs == rhs);
  }
}
