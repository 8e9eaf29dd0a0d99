#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linfty/graded_space.hpp"
#include "linfty/rational.hpp"

namespace linfty {

// Sorted list of generator indices; even generators may repeat, odd ones may not.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order: by weight, then lexicographically.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Parity monomial_parity(const GradedSpace& space, const Monomial& m);

struct SignedMonomial {
  int sign = 0;  // 0 when the product vanishes
  Monomial monomial;
};

// Brings a word of generator indices to normal form with its Koszul sign.
SignedMonomial normalize(const GradedSpace& space, std::vector<std::uint32_t> word);
SignedMonomial multiply(const GradedSpace& space, const Monomial& a, const Monomial& b);

// All monomials of the given weight in graded lexicographic order.
std::vector<Monomial> monomials_of_weight(const GradedSpace& space, int weight);

// Element of the completed free graded-commutative algebra on a graded space,
// known exactly through weight cutoff(); terms above the cutoff are not stored.
class TruncatedPolynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  TruncatedPolynomial(SpacePtr space, int cutoff);
  static TruncatedPolynomial constant(SpacePtr space, const Rational& c, int cutoff);
  static TruncatedPolynomial generator(SpacePtr space, std::size_t i, int cutoff);
  static TruncatedPolynomial word(SpacePtr space, std::vector<std::uint32_t> w, const Rational& c, int cutoff);

  const SpacePtr& space() const { return space_; }
  int cutoff() const { return cutoff_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Lowest weight present; cutoff() + 1 for the zero element.
  int min_weight() const;
  int max_weight() const;
  Rational coefficient(const Monomial& m) const;
  // Parity if homogeneous; the zero element counts as homogeneous of any parity.
  std::optional<Parity> parity() const;
  bool has_parity(Parity p) const;

  void add_term(const Monomial& m, const Rational& c);

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& o);
  TruncatedPolynomial operator-() const;
  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
  friend TruncatedPolynomial operator*(const Rational& s, const TruncatedPolynomial& p);

  // Equal through the smaller of the two cutoffs.
  friend bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

  std::string str() const;

 private:
  SpacePtr space_;
  int cutoff_;
  Terms terms_;
};

void require_same_space(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

// Product known through min of the cutoffs.
TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
// Product kept through the largest weight it is exact at, but no further than cap.
TruncatedPolynomial multiply_bounded(const TruncatedPolynomial& a, const TruncatedPolynomial& b, int cap);

TruncatedPolynomial weight_component(const TruncatedPolynomial& p, int w);
TruncatedPolynomial truncate(const TruncatedPolynomial& p, int cutoff);
TruncatedPolynomial parity_component(const TruncatedPolynomial& p, Parity parity);
// Left partial derivative with respect to generator i.
TruncatedPolynomial partial(const TruncatedPolynomial& p, std::size_t i);

}  // namespace linfty
