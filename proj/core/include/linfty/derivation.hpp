#pragma once

#include <map>
#include <vector>

#include "linfty/linear_map.hpp"
#include "linfty/polynomial.hpp"

namespace linfty {

// Homogeneous derivation of the completed symmetric algebra, determined by
// its values on generators: xi = sum_i xi(x_i) d/dx_i.
class Derivation {
 public:
  Derivation(SpacePtr space, Parity parity, int cutoff);
  Derivation(SpacePtr space, Parity parity, std::vector<TruncatedPolynomial> values);
  // The linear vector field x_i -> sum_j M(j,i) x_j of an endomorphism.
  static Derivation linear(SpacePtr space, const LinearMap& m, int cutoff);
  static Derivation coordinate(SpacePtr space, std::size_t i, int cutoff);  // d/dx_i

  const SpacePtr& space() const { return space_; }
  Parity parity() const { return parity_; }
  int cutoff() const;
  // Lowest weight among the values.
  int min_weight() const;
  const TruncatedPolynomial& value(std::size_t i) const { return values_[i]; }
  const std::vector<TruncatedPolynomial>& values() const { return values_; }
  bool is_zero() const;

  void set_value(std::size_t i, TruncatedPolynomial v);

  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Rational& s, const Derivation& d);
  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  SpacePtr space_;
  Parity parity_;
  std::vector<TruncatedPolynomial> values_;
};

Derivation truncate(const Derivation& d, int cutoff);
Derivation weight_component(const Derivation& d, int w);

TruncatedPolynomial eval(const Derivation& xi, const TruncatedPolynomial& f);
// xi o eta - (-1)^{|xi||eta|} eta o xi
Derivation bracket(const Derivation& xi, const Derivation& eta);
// sum_i (-1)^{|f_i||x_i|} d/dx_i f_i
TruncatedPolynomial divergence(const Derivation& xi);

// Graded-symmetric multilinear map from n copies of the dual of the generator
// space to itself.  Entries are indexed by sorted input multisets.
class SymMultiMap {
 public:
  SymMultiMap(SpacePtr space, int arity, Parity parity);

  const SpacePtr& space() const { return space_; }
  int arity() const { return arity_; }
  Parity parity() const { return parity_; }
  const std::map<std::vector<std::uint32_t>, SparseVector>& entries() const { return entries_; }

  // Inputs in any order; reorders with the Koszul sign.
  SparseVector value(const std::vector<std::uint32_t>& inputs) const;
  void set(const std::vector<std::uint32_t>& inputs, const SparseVector& out);

  friend bool operator==(const SymMultiMap&, const SymMultiMap&) = default;

 private:
  SpacePtr space_;
  int arity_;
  Parity parity_;
  std::map<std::vector<std::uint32_t>, SparseVector> entries_;
};

// Koszul sign of sorting a list of basis vectors (0 if an odd one repeats).
int koszul_sort_sign(const GradedSpace& space, std::vector<std::uint32_t> inputs);

// Number of permutations fixing the sorted input list.
Rational multiplicity_factor(const std::vector<std::uint32_t>& sorted);

// Weight-n part of xi as the multilinear map xi*(sum over S_n of the permuted inputs).
SymMultiMap to_multilinear(const Derivation& xi, int n);
Derivation from_multilinear(const SymMultiMap& m, int cutoff);

// Supertrace of x -> xi~(fixed..., x); fixed has n-1 entries.
Rational supertrace_of_slot(const Derivation& xi, const std::vector<std::uint32_t>& fixed);
// The polynomial f evaluated as a symmetric multilinear form on the given inputs.
Rational evaluate_symmetric(const TruncatedPolynomial& f, const std::vector<std::uint32_t>& inputs);

}  // namespace linfty
