#pragma once

#include <cstdint>
#include <random>

#include "linfty/derivation.hpp"

namespace linfty {

// Deterministic sampling of algebraic objects for fuzzing and property tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  bool coin(double p = 0.5);
  // Small nonzero rational with numerator and denominator bounded by 3.
  Rational rational();

  GradedSpace space(int max_even, int max_odd, int min_dim = 1);
  TruncatedPolynomial polynomial(SpacePtr space, Parity parity, int min_weight, int max_weight, int cutoff,
                                 double density = 0.5);
  Derivation derivation(SpacePtr space, Parity parity, int min_weight, int max_weight, int cutoff,
                        double density = 0.5);
  // Invertible even endomorphism.
  LinearMap invertible(const GradedSpace& space);
  // Odd endomorphism squaring to zero, conjugated from a random normal form.
  LinearMap square_zero(const GradedSpace& space);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace linfty
