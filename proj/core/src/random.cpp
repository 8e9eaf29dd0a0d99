#include "linfty/random.hpp"

#include <algorithm>

#include "linfty/errors.hpp"

namespace linfty {

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational Sampler::rational() {
  int n = uniform(1, 3) * (coin() ? 1 : -1);
  int d = uniform(1, 3);
  return Rational(n, d);
}

GradedSpace Sampler::space(int max_even, int max_odd, int min_dim) {
  int e = 0, o = 0;
  do {
    e = uniform(0, max_even);
    o = uniform(0, max_odd);
  } while (e + o < min_dim);
  std::vector<Generator> basis;
  for (int i = 0; i < e; ++i) basis.push_back({"x" + std::to_string(i + 1), Parity::Even});
  for (int i = 0; i < o; ++i) basis.push_back({"t" + std::to_string(i + 1), Parity::Odd});
  return GradedSpace(std::move(basis));
}

TruncatedPolynomial Sampler::polynomial(SpacePtr space, Parity parity, int min_weight, int max_weight, int cutoff,
                                        double density) {
  TruncatedPolynomial p(space, cutoff);
  for (int w = std::max(min_weight, 0); w <= std::min(max_weight, cutoff); ++w)
    for (const auto& m : monomials_of_weight(*space, w))
      if (monomial_parity(*space, m) == parity && coin(density)) p.add_term(m, rational());
  return p;
}

Derivation Sampler::derivation(SpacePtr space, Parity parity, int min_weight, int max_weight, int cutoff,
                               double density) {
  std::vector<TruncatedPolynomial> values;
  for (std::size_t i = 0; i < space->dim(); ++i)
    values.push_back(polynomial(space, space->parity(i) + parity, min_weight, max_weight, cutoff, density));
  return Derivation(space, parity, std::move(values));
}

LinearMap Sampler::invertible(const GradedSpace& space) {
  // unipotent lower times upper triangular within each parity block
  LinearMap::Entries lo, up;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    lo[{i, i}] = Rational(1);
    up[{i, i}] = Rational(coin() ? 1 : -1);
    for (std::size_t j = 0; j < i; ++j) {
      if (space.parity(i) != space.parity(j)) continue;
      if (coin()) lo[{i, j}] = rational();
      if (coin()) up[{j, i}] = rational();
    }
  }
  return compose(LinearMap(space, space, Parity::Even, lo), LinearMap(space, space, Parity::Even, up));
}

LinearMap Sampler::square_zero(const GradedSpace& space) {
  // pair up even and odd basis vectors, then conjugate
  std::vector<std::size_t> evens, odds;
  for (std::size_t i = 0; i < space.dim(); ++i) (space.parity(i) == Parity::Even ? evens : odds).push_back(i);
  std::shuffle(evens.begin(), evens.end(), rng_);
  std::shuffle(odds.begin(), odds.end(), rng_);
  LinearMap::Entries e;
  std::size_t pairs = uniform(0, static_cast<int>(std::min(evens.size(), odds.size())));
  for (std::size_t k = 0; k < pairs; ++k) {
    if (coin()) e[{odds[k], evens[k]}] = Rational(1);
    else e[{evens[k], odds[k]}] = Rational(1);
  }
  LinearMap d0(space, space, Parity::Odd, e);
  LinearMap g = invertible(space);
  LinearMap ginv = inverse(g);
  return compose(g, compose(d0, ginv));
}

}  // namespace linfty
