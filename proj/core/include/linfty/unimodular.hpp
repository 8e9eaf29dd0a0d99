#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linfty/linfty.hpp"

namespace linfty {

// Element (xi, Pi f) of g[V] = Der_{>=2} + Pi S_{>=1}.  The stored f is the
// unshifted function, so a homogeneous element has |xi| = |f| + 1.
struct SemidirectElement {
  Derivation xi;
  TruncatedPolynomial f;

  SemidirectElement(Derivation xi, TruncatedPolynomial f);
  std::optional<Parity> parity() const;
  bool is_zero() const { return xi.is_zero() && f.is_zero(); }
};

SemidirectElement operator+(const SemidirectElement& a, const SemidirectElement& b);
SemidirectElement operator*(const Rational& s, const SemidirectElement& a);

// [xi, Pi g] = (-1)^{|xi|} Pi xi(g) and [Pi f, eta] = -(-1)^{|f||eta|} Pi eta(f); Pi parts commute.
SemidirectElement semidirect_bracket(const SemidirectElement& a, const SemidirectElement& b);
// ([d, xi], -Pi d(f)) for the linear differential d.
SemidirectElement internal_differential(const Derivation& d, const SemidirectElement& a);
// (0, 1/2 Pi div xi)
SemidirectElement external_differential(const Derivation& xi);
SemidirectElement total_differential(const Derivation& d, const SemidirectElement& a);

// A structure m together with an even f of weight >= 1 solving
// d(f) + 1/2 div(m) + m(f) = 0.  As an element of g[V] this is (m, -Pi f).
struct UnimodularStructure {
  LInftyStructure base;
  TruncatedPolynomial f;
};

struct UnimodularReport {
  bool ok = false;
  bool strict = false;
  int cutoff = 0;                                  // residual is exact through this weight
  std::map<int, TruncatedPolynomial> residual;     // nonzero weight components
};

UnimodularReport check_unimodular(const UnimodularStructure& u);

struct ObstructionReport {
  bool vanishes = false;
  TruncatedPolynomial cocycle;                     // div(m)
  int reliable_weight = 0;
  std::optional<TruncatedPolynomial> lift;         // some f, when the class vanishes
  std::size_t lift_dimension = 0;                  // dimension of the affine space of lifts
  std::optional<TruncatedPolynomial> certificate;  // functional separating the cocycle from the image
  int obstructed_at = -1;
};

ObstructionReport obstruction_class(const LInftyStructure& s);

// Every ad(v) has zero supertrace.
bool lie_unimodular(const LieAlgebra& g);

enum class DimensionClass { Surjective, Exceptional };

struct DimensionReport {
  DimensionClass expected = DimensionClass::Surjective;  // from the parity of PiV*
  DimensionClass observed = DimensionClass::Surjective;  // even cokernel at this cutoff
  int cutoff = 0;
  std::vector<Monomial> missed;                          // monomials of weight 1..cutoff outside the image
  std::size_t cokernel_dim = 0;
  std::size_t even_cokernel_dim = 0;
  std::optional<Monomial> top;                           // product of all generators when PiV* is purely odd
};

// Cokernel of div: Der_{>=2}(S PiV*) -> S_{>=1} PiV* on weights 1..cutoff.  Only
// the even part obstructs strictification, since lifts f are even.
DimensionReport classify_dimension(const GradedSpace& v, int cutoff);

}  // namespace linfty
