#pragma once

#include <map>
#include <utility>
#include <vector>

#include "linfty/graded_space.hpp"
#include "linfty/linalg.hpp"
#include "linfty/rational.hpp"

namespace linfty {

using Vector = std::vector<Rational>;

// Homogeneous linear map between graded spaces, stored as sorted
// (row, column) -> coefficient entries with row indexing the target.
class LinearMap {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, Rational>;

  LinearMap(GradedSpace source, GradedSpace target, Parity parity, Entries entries = {});
  static LinearMap identity(const GradedSpace& v);
  static LinearMap zero(const GradedSpace& source, const GradedSpace& target, Parity parity);

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  Parity parity() const { return parity_; }
  const Entries& entries() const { return entries_; }
  Rational at(std::size_t row, std::size_t col) const;
  bool is_zero() const { return entries_.empty(); }

  Vector apply(const Vector& x) const;
  SparseMatrix matrix() const;

  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap operator*(const Rational& s) const;
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  GradedSpace source_, target_;
  Parity parity_;
  Entries entries_;
};

// a o b
LinearMap compose(const LinearMap& a, const LinearMap& b);
// Inverse of an invertible even endomorphism; E_PRECONDITION if singular.
LinearMap inverse(const LinearMap& a);

// Graded commutator a b - (-1)^{|a||b|} b a.
LinearMap commutator(const LinearMap& a, const LinearMap& b);
// Sum of even diagonal entries minus sum of odd diagonal entries.
Rational supertrace(const LinearMap& a);

// Homogeneous graded-symmetric bilinear form: <u,v> = (-1)^{|u||v|} <v,u>.
class BilinearForm {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, Rational>;

  // Missing transposed entries are filled in by graded symmetry;
  // inconsistent ones raise E_SHAPE.
  BilinearForm(GradedSpace space, Parity parity, const Entries& entries);

  const GradedSpace& space() const { return space_; }
  Parity parity() const { return parity_; }
  const Entries& entries() const { return entries_; }
  Rational at(std::size_t i, std::size_t j) const;
  Rational operator()(const Vector& u, const Vector& v) const;
  bool nondegenerate() const;
  SparseMatrix matrix() const;

 private:
  GradedSpace space_;
  Parity parity_;
  Entries entries_;
};

// v -> <v, .> as a map V -> V* of the form's parity.  Requires nondegeneracy.
LinearMap form_dual(const BilinearForm& form);

// Graded space with an odd square-zero differential.
class Complex {
 public:
  Complex(GradedSpace space, LinearMap differential);
  static Complex trivial(const GradedSpace& space);

  const GradedSpace& space() const { return space_; }
  const LinearMap& differential() const { return d_; }

 private:
  GradedSpace space_;
  LinearMap d_;
};

}  // namespace linfty
