#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linfty/linfty.hpp"

namespace linfty {

// Finite-dimensional graded commutative dg algebra given by structure constants.
class Cdga {
 public:
  using Products = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  // Products are completed by graded commutativity; the remaining axioms are checked.
  Cdga(GradedSpace space, const Products& products, std::optional<LinearMap> differential = std::nullopt,
       std::optional<std::size_t> unit = std::nullopt, std::optional<BilinearForm> pairing = std::nullopt);

  const GradedSpace& space() const { return space_; }
  const LinearMap& differential() const { return d_; }
  const std::optional<std::size_t>& unit() const { return unit_; }
  const std::optional<BilinearForm>& pairing() const { return pairing_; }

  SparseVector product(std::size_t a, std::size_t b) const;
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  // Left multiplication by a basis element.
  LinearMap multiplication(std::size_t a) const;
  Rational euler_characteristic() const;

 private:
  GradedSpace space_;
  Products products_;
  LinearMap d_;
  std::optional<std::size_t> unit_;
  std::optional<BilinearForm> pairing_;
};

namespace frobenius {
Cdga point();     // k
Cdga circle();    // H(S^1) = Lambda(theta), odd pairing
Cdga sphere2();   // H(S^2) = k[w]/w^2, even pairing
Cdga sphere3();   // H(S^3), odd top class
Cdga torus();     // H(T^2), ab = omega
std::vector<std::string> names();
// Accepts the names above as well as H_pt, H_S1, H_S2, H_S3, H_T2 and k.
Cdga by_name(const std::string& name);
}  // namespace frobenius

// Multiplication by every element has zero supertrace.
bool cdga_unimodular(const Cdga& a);
// Orthogonal idempotents summing to 1: unimodular iff every e_i A has dimension l|l.
bool idempotent_criterion(const Cdga& a, const std::vector<SparseVector>& idempotents);

// Generators of S Pi(A (x) V)*: the basis e_alpha (x) z_a, with index alpha * dim + a.
SpacePtr tensor_space(const Cdga& a, const GradedSpace& generators);
// Upper bound on dim(A (x) V); read from LINFTY_MAX_DIM, default 64.
std::size_t tensor_dimension_cap();

// X^n (x) xi~ on each homogeneous component, with Koszul signs.
Derivation psi(const Cdga& a, const Derivation& xi, SpacePtr target);
// f~(a_1 z_1, ..., a_n z_n) = +- str(a_1 ... a_n) f(z_1, ..., z_n)
TruncatedPolynomial psi_prime(const Cdga& a, const TruncatedPolynomial& f, SpacePtr target);

// Tensor L-infinity structure, including the differential of A.
LInftyStructure tensor_linfty(const Cdga& a, const LInftyStructure& s);
// (a v, b u) = (-1)^{|a|(|u|+|b|)} [a,b] <v,u> on A (x) V, the sign that makes
// tensor products of cyclic structures cyclic for the generator conventions used here.
CyclicData tensor_pairing(const Cdga& a, const CyclicData& c);

}  // namespace linfty
