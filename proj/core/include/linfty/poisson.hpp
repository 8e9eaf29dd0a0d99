#pragma once

#include <map>

#include "linfty/derivation.hpp"

namespace linfty {

// Constant Poisson structure on the generators: P(a,b) = {z_a, z_b}.
// An even bracket is graded antisymmetric, (f,g) = -(-1)^{|f||g|} (g,f);
// an odd bracket is graded symmetric, {f,g} = (-1)^{|f||g|} {g,f}.
class PoissonStructure {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, Rational>;

  // Transposed entries are completed by the symmetry rule.
  PoissonStructure(SpacePtr space, Parity parity, const Entries& entries);

  const SpacePtr& space() const { return space_; }
  Parity parity() const { return parity_; }
  const Entries& entries() const { return entries_; }
  Rational at(std::size_t a, std::size_t b) const;
  bool nondegenerate() const;

 private:
  SpacePtr space_;
  Parity parity_;
  Entries entries_;
};

TruncatedPolynomial poisson_bracket(const PoissonStructure& p, const TruncatedPolynomial& f,
                                    const TruncatedPolynomial& g);
// X_h(g) = (-1)^{|h|} (h,g) for an even bracket, {h,g} for an odd one.
Derivation hamiltonian_field(const PoissonStructure& p, const TruncatedPolynomial& h);
// Half the divergence of the Hamiltonian field.  Odd brackets only.
TruncatedPolynomial laplacian(const PoissonStructure& p, const TruncatedPolynomial& g);

enum class DoubleKind { Even, Odd };

// V* + V (even) or V* + PiV (odd) on the generators x_i of a base space:
// the first n generators are the x_i, the next n their partners.
struct DoubleSpace {
  DoubleKind kind;
  SpacePtr base;
  PoissonStructure poisson;

  std::size_t partner(std::size_t i) const { return i + base->dim(); }
  const SpacePtr& space() const { return poisson.space(); }
  TruncatedPolynomial lift(const TruncatedPolynomial& f) const;  // base functions as functions on the double
};

DoubleSpace make_double(SpacePtr base, DoubleKind kind);

// f d/dx_i -> f x_i*
TruncatedPolynomial double_even(const DoubleSpace& d, const Derivation& xi);
// f d/dx_i -> (-1)^{|f|} f Pi x_i*
TruncatedPolynomial double_odd(const DoubleSpace& d, const Derivation& xi);
// sum_i d/dx_i d/dPix_i*, the coordinate form of the odd Laplacian
TruncatedPolynomial laplacian_darboux(const DoubleSpace& d, const TruncatedPolynomial& g);

}  // namespace linfty
