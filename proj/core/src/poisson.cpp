#include "linfty/poisson.hpp"

#include <algorithm>

#include "linfty/errors.hpp"

namespace linfty {

namespace {

// {f, z_a} in terms of {z_a, f}
Rational swap_sign(Parity bracket, Parity f, Parity a) {
  Rational s = sign_power(koszul(f, a));
  return bracket == Parity::Even ? -s : s;
}

// {z_a, f} = sum_b P(a,b) d/dz_b f
TruncatedPolynomial left_generator_bracket(const PoissonStructure& p, std::size_t a, const TruncatedPolynomial& f) {
  TruncatedPolynomial out(f.space(), f.cutoff() - 1);
  for (std::size_t b = 0; b < p.space()->dim(); ++b) {
    Rational c = p.at(a, b);
    if (!c.is_zero()) out += c * partial(f, b);
  }
  return out;
}

}  // namespace

PoissonStructure::PoissonStructure(SpacePtr space, Parity parity, const Entries& entries)
    : space_(std::move(space)), parity_(parity) {
  const GradedSpace& s = *space_;
  for (const auto& [ab, v] : entries) {
    auto [a, b] = ab;
    require(a < s.dim() && b < s.dim(), ErrorCode::Shape, "Poisson entry out of range");
    if (v.is_zero()) continue;
    require(s.parity(a) + s.parity(b) + parity_ == Parity::Even, ErrorCode::Parity,
            "Poisson entry {" + s.name(a) + "," + s.name(b) + "} has the wrong parity");
    Rational mirrored = swap_sign(parity_, s.parity(a), s.parity(b)) * v;
    for (auto [key, val] : {std::pair{ab, v}, std::pair{std::pair{b, a}, mirrored}}) {
      auto [it, fresh] = entries_.try_emplace(key, val);
      require(fresh || it->second == val, ErrorCode::Shape,
              "Poisson entries for {" + s.name(a) + "," + s.name(b) + "} violate the symmetry rule");
    }
  }
}

Rational PoissonStructure::at(std::size_t a, std::size_t b) const {
  auto it = entries_.find({a, b});
  return it == entries_.end() ? Rational() : it->second;
}

bool PoissonStructure::nondegenerate() const {
  SparseMatrix m(space_->dim(), space_->dim());
  for (const auto& [ab, v] : entries_) m.add(ab.first, ab.second, v);
  return rank(m) == space_->dim();
}

TruncatedPolynomial poisson_bracket(const PoissonStructure& p, const TruncatedPolynomial& f,
                                    const TruncatedPolynomial& g) {
  require_same_space(f, g);
  require_same_space(f, TruncatedPolynomial(p.space(), 0));
  const int cap = std::min(f.cutoff(), g.cutoff());
  TruncatedPolynomial out(p.space(), cap);
  bool first = true;
  for (Parity pf : {Parity::Even, Parity::Odd}) {
    TruncatedPolynomial fp = parity_component(f, pf);
    if (fp.is_zero()) continue;
    for (std::size_t a = 0; a < p.space()->dim(); ++a) {
      TruncatedPolynomial fa = swap_sign(p.parity(), pf, p.space()->parity(a)) * left_generator_bracket(p, a, fp);
      TruncatedPolynomial term = multiply_bounded(fa, partial(g, a), cap);
      if (first) {
        out = term;
        first = false;
      } else {
        out += term;
      }
    }
  }
  return out;
}

Derivation hamiltonian_field(const PoissonStructure& p, const TruncatedPolynomial& h) {
  auto ph = h.parity();
  require(ph.has_value(), ErrorCode::Parity, "Hamiltonian must be homogeneous");
  Rational s = p.parity() == Parity::Even ? sign_power(bit(*ph)) : Rational(1);
  std::vector<TruncatedPolynomial> values;
  for (std::size_t a = 0; a < p.space()->dim(); ++a) {
    auto z = TruncatedPolynomial::generator(p.space(), a, h.cutoff());
    values.push_back(s * poisson_bracket(p, h, z));
  }
  return Derivation(p.space(), *ph + p.parity(), std::move(values));
}

TruncatedPolynomial laplacian(const PoissonStructure& p, const TruncatedPolynomial& g) {
  require(p.parity() == Parity::Odd, ErrorCode::Precondition, "the Laplacian needs an odd bracket");
  TruncatedPolynomial out(g.space(), g.cutoff() - 2);
  for (Parity pg : {Parity::Even, Parity::Odd}) {
    TruncatedPolynomial part = parity_component(g, pg);
    if (!part.is_zero()) out += Rational(1, 2) * divergence(hamiltonian_field(p, part));
  }
  return out;
}

TruncatedPolynomial DoubleSpace::lift(const TruncatedPolynomial& f) const {
  require(*f.space() == *base, ErrorCode::Space, "function does not live on the base space");
  TruncatedPolynomial out(space(), f.cutoff());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c);
  return out;
}

DoubleSpace make_double(SpacePtr base, DoubleKind kind) {
  std::vector<Generator> gens = base->basis();
  const std::size_t n = base->dim();
  for (const auto& g : base->basis()) {
    if (kind == DoubleKind::Even) gens.push_back({g.name + "*", g.parity});
    else gens.push_back({"Π" + g.name + "*", flip(g.parity)});
  }
  auto total = make_space(std::move(gens));
  PoissonStructure::Entries e;
  for (std::size_t i = 0; i < n; ++i) {
    // (x_i*, x_i) = 1 and {Pi x_i*, x_i} = 1
    e[{n + i, i}] = Rational(1);
  }
  PoissonStructure p(total, kind == DoubleKind::Even ? Parity::Even : Parity::Odd, e);
  return DoubleSpace{kind, std::move(base), std::move(p)};
}

TruncatedPolynomial double_even(const DoubleSpace& d, const Derivation& xi) {
  require(d.kind == DoubleKind::Even, ErrorCode::Precondition, "even doubling needs an even double");
  require(*xi.space() == *d.base, ErrorCode::Space, "derivation does not live on the base space");
  TruncatedPolynomial out(d.space(), xi.cutoff() + 1);
  for (std::size_t i = 0; i < d.base->dim(); ++i) {
    auto partner = TruncatedPolynomial::generator(d.space(), d.partner(i), xi.cutoff() + 1);
    out += multiply_bounded(d.lift(xi.value(i)), partner, xi.cutoff() + 1);
  }
  return out;
}

TruncatedPolynomial double_odd(const DoubleSpace& d, const Derivation& xi) {
  require(d.kind == DoubleKind::Odd, ErrorCode::Precondition, "odd doubling needs an odd double");
  require(*xi.space() == *d.base, ErrorCode::Space, "derivation does not live on the base space");
  TruncatedPolynomial out(d.space(), xi.cutoff() + 1);
  for (std::size_t i = 0; i < d.base->dim(); ++i) {
    auto partner = TruncatedPolynomial::generator(d.space(), d.partner(i), xi.cutoff() + 1);
    for (Parity pf : {Parity::Even, Parity::Odd}) {
      auto f = parity_component(xi.value(i), pf);
      if (f.is_zero()) continue;
      out += sign_power(bit(pf)) * multiply_bounded(d.lift(f), partner, xi.cutoff() + 1);
    }
  }
  return out;
}

TruncatedPolynomial laplacian_darboux(const DoubleSpace& d, const TruncatedPolynomial& g) {
  require(d.kind == DoubleKind::Odd, ErrorCode::Precondition, "the Laplacian needs an odd double");
  TruncatedPolynomial out(g.space(), g.cutoff() - 2);
  for (std::size_t i = 0; i < d.base->dim(); ++i) out += partial(partial(g, d.partner(i)), i);
  return out;
}

}  // namespace linfty
