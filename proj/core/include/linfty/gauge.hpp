#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linfty/errors.hpp"
#include "linfty/linfty.hpp"
#include "linfty/unimodular.hpp"

namespace linfty {

// Series (exponentials, BCH, gauge action) give up after this many terms.
inline constexpr int kSeriesCap = 64;

// A dgla model provides Element, add, scale, bracket, d, is_zero and
// has_parity.  The algorithms below only use that interface.

// Finite-dimensional dgla by structure constants and a differential.
class FiniteDgla {
 public:
  using Element = Vector;

  // Checks d odd, d^2 = 0, Jacobi and the Leibniz rule.
  FiniteDgla(LieAlgebra lie, LinearMap d);
  explicit FiniteDgla(LieAlgebra lie);

  const GradedSpace& space() const { return lie_.space(); }
  const LieAlgebra& lie() const { return lie_; }
  const LinearMap& differential() const { return d_; }
  // Length of the lower central series, or nullopt if it stalls above zero.
  std::optional<int> nilpotency() const { return nilpotency_; }

  Element basis(std::size_t i) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Rational& s, const Element& a) const;
  Element bracket(const Element& a, const Element& b) const;
  Element d(const Element& a) const { return d_.apply(a); }
  bool is_zero(const Element& a) const;
  bool has_parity(const Element& a, Parity p) const;

 private:
  LieAlgebra lie_;
  LinearMap d_;
  std::optional<int> nilpotency_;
};

// Der_{>=2} of the completed symmetric algebra, truncated at the cutoff of
// the base derivation, with differential [delta, .].  Brackets raise weight,
// so every series terminates within the cutoff.
class DerivationDgla {
 public:
  using Element = Derivation;

  // delta odd with [delta, delta] = 0 and values of weight >= 1.
  DerivationDgla(SpacePtr space, Derivation delta);
  DerivationDgla(SpacePtr space, int cutoff);

  const SpacePtr& space() const { return space_; }
  const Derivation& delta() const { return delta_; }
  int cutoff() const { return delta_.cutoff(); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element scale(const Rational& s, const Element& a) const { return s * a; }
  Element bracket(const Element& a, const Element& b) const;
  Element d(const Element& a) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool has_parity(const Element& a, Parity p) const { return a.is_zero() || a.parity() == p; }

 private:
  SpacePtr space_;
  Derivation delta_;
};

// g[V] with the total differential of a linear differential.
class SemidirectDgla {
 public:
  using Element = SemidirectElement;

  SemidirectDgla(SpacePtr space, Derivation d);

  const SpacePtr& space() const { return space_; }
  const Derivation& linear_part() const { return d_; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element scale(const Rational& s, const Element& a) const { return s * a; }
  Element bracket(const Element& a, const Element& b) const { return semidirect_bracket(a, b); }
  Element d(const Element& a) const { return total_differential(d_, a); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool has_parity(const Element& a, Parity p) const { return !a.parity() || *a.parity() == p; }

 private:
  SpacePtr space_;
  Derivation d_;
};

template <class G>
typename G::Element subtract(const G& g, const typename G::Element& a, const typename G::Element& b) {
  return g.add(a, g.scale(Rational(-1), b));
}

template <class G>
bool elements_equal(const G& g, const typename G::Element& a, const typename G::Element& b) {
  return g.is_zero(subtract(g, a, b));
}

// d xi + 1/2 [xi, xi]
template <class G>
typename G::Element mc_residual(const G& g, const typename G::Element& xi) {
  return g.add(g.d(xi), g.scale(Rational(1, 2), g.bracket(xi, xi)));
}

template <class G>
bool is_mc(const G& g, const typename G::Element& xi) {
  return g.has_parity(xi, Parity::Odd) && g.is_zero(mc_residual(g, xi));
}

// g with differential d + ad(xi).
template <class G>
class Twisted {
 public:
  using Element = typename G::Element;

  Twisted(G base, Element xi) : base_(std::move(base)), xi_(std::move(xi)) {
    require(is_mc(base_, xi_), ErrorCode::Precondition, "twisting element is not Maurer-Cartan");
  }

  const G& base() const { return base_; }
  const Element& twisting() const { return xi_; }

  Element add(const Element& a, const Element& b) const { return base_.add(a, b); }
  Element scale(const Rational& s, const Element& a) const { return base_.scale(s, a); }
  Element bracket(const Element& a, const Element& b) const { return base_.bracket(a, b); }
  Element d(const Element& a) const { return base_.add(base_.d(a), base_.bracket(xi_, a)); }
  bool is_zero(const Element& a) const { return base_.is_zero(a); }
  bool has_parity(const Element& a, Parity p) const { return base_.has_parity(a, p); }

 private:
  G base_;
  Element xi_;
};

template <class G>
Twisted<G> twist(const G& g, const typename G::Element& xi) {
  return Twisted<G>(g, xi);
}

// The twisted dgla as structure constants; checks (d + ad xi)^2 = 0.
FiniteDgla twist(const FiniteDgla& g, const Vector& xi);

// e^y . xi = xi + sum_{n>=1} 1/n! ad(y)^{n-1}([y, xi] - dy)
template <class G>
typename G::Element gauge_apply(const G& g, const typename G::Element& y, const typename G::Element& xi,
                                int cap = kSeriesCap) {
  require(g.has_parity(y, Parity::Even), ErrorCode::Parity, "gauge parameter must be even");
  require(is_mc(g, xi), ErrorCode::Precondition, "gauge action needs a Maurer-Cartan element");
  auto term = subtract(g, g.bracket(y, xi), g.d(y));
  auto out = xi;
  Rational coeff(1);
  for (int n = 1; !g.is_zero(term); ++n) {
    require(n <= cap, ErrorCode::NotNilpotent, "gauge series did not terminate");
    coeff /= Rational(n);
    out = g.add(out, g.scale(coeff, term));
    term = g.bracket(y, term);
  }
  if (!is_mc(g, out)) throw std::logic_error("gauge action left the Maurer-Cartan set");
  return out;
}

// y fixes xi exactly when dy + [xi, y] = 0.
template <class G>
bool stabilizes(const G& g, const typename G::Element& y, const typename G::Element& xi) {
  return g.is_zero(g.add(g.d(y), g.bracket(xi, y)));
}

// e^{y0} * eta = e^y . (eta + xi) - xi for a lift y of a twisted cycle y0.
template <class G>
typename G::Element star_apply(const G& g, const typename G::Element& y, const typename G::Element& xi,
                               const typename G::Element& eta) {
  return subtract(g, gauge_apply(g, y, g.add(eta, xi)), xi);
}

namespace detail {
// Coefficient of a word in log(e^X e^Y); letters 0 = X and 1 = Y.
Rational log_exp_coefficient(const std::vector<int>& word);
}  // namespace detail

// Baker-Campbell-Hausdorff product of even elements, with each homogeneous
// part recovered from right-nested brackets.  Fails if some bracket of
// length cap + 1 is nonzero.
template <class G>
typename G::Element bch(const G& g, const typename G::Element& x, const typename G::Element& y,
                        int cap = kSeriesCap) {
  using E = typename G::Element;
  require(g.has_parity(x, Parity::Even) && g.has_parity(y, Parity::Even), ErrorCode::Parity,
          "BCH needs even elements");
  struct Node {
    std::vector<int> word;  // stored reversed, innermost letter first
    E value;
  };
  E out = g.add(x, y);
  std::vector<Node> layer;
  if (!g.is_zero(x)) layer.push_back({{0}, x});
  if (!g.is_zero(y)) layer.push_back({{1}, y});
  for (int m = 2; !layer.empty(); ++m) {
    std::vector<Node> next;
    for (const auto& n : layer) {
      for (int letter : {0, 1}) {
        E v = g.bracket(letter == 0 ? x : y, n.value);
        if (g.is_zero(v)) continue;
        auto w = n.word;
        w.push_back(letter);
        next.push_back({std::move(w), std::move(v)});
      }
    }
    if (next.empty()) break;
    require(m <= cap, ErrorCode::NotNilpotent, "BCH series did not terminate");
    for (const auto& n : next) {
      std::vector<int> word(n.word.rbegin(), n.word.rend());
      Rational c = detail::log_exp_coefficient(word) / Rational(m);
      if (!c.is_zero()) out = g.add(out, g.scale(c, n.value));
    }
    layer = std::move(next);
  }
  return out;
}

// Even map commuting with differentials and brackets.
bool is_dgla_morphism(const LinearMap& f, const FiniteDgla& g, const FiniteDgla& h);

struct DglaCohomology {
  std::size_t even = 0, odd = 0;
  std::vector<Vector> even_representatives;
};
DglaCohomology cohomology(const FiniteDgla& g);

}  // namespace linfty
