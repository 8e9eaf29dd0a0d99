#include "linfty/unimodular.hpp"

#include "linfty/errors.hpp"

namespace linfty {

namespace {

void check_shape(const Derivation& xi, const TruncatedPolynomial& f) {
  require(*xi.space() == *f.space(), ErrorCode::Space, "semidirect parts on different spaces");
  require(xi.min_weight() >= 2, ErrorCode::Precondition, "derivation part must have weight at least 2");
  require(f.min_weight() >= 1, ErrorCode::Precondition, "function part must have weight at least 1");
  auto pf = f.parity();
  require(pf.has_value(), ErrorCode::Parity, "function part is not homogeneous");
  require(xi.is_zero() || f.is_zero() || xi.parity() == flip(*pf), ErrorCode::Parity,
          "semidirect element is not homogeneous");
}

Parity xi_parity(const SemidirectElement& a) {
  if (!a.xi.is_zero() || a.f.is_zero()) return a.xi.parity();
  return flip(*a.f.parity());
}

}  // namespace

SemidirectElement::SemidirectElement(Derivation x, TruncatedPolynomial g) : xi(std::move(x)), f(std::move(g)) {
  check_shape(xi, f);
  if (xi.is_zero() && !f.is_zero() && xi.parity() != flip(*f.parity()))
    xi = Derivation(xi.space(), flip(*f.parity()), xi.cutoff());
}

std::optional<Parity> SemidirectElement::parity() const {
  if (is_zero()) return std::nullopt;
  return xi_parity(*this);
}

SemidirectElement operator+(const SemidirectElement& a, const SemidirectElement& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return SemidirectElement(a.xi + b.xi, a.f + b.f);
}

SemidirectElement operator*(const Rational& s, const SemidirectElement& a) {
  return SemidirectElement(s * a.xi, s * a.f);
}

SemidirectElement semidirect_bracket(const SemidirectElement& a, const SemidirectElement& b) {
  Parity pa = xi_parity(a), pb = xi_parity(b);
  Derivation xi = bracket(a.xi, b.xi);
  // |f| = |xi| + 1 on homogeneous elements
  TruncatedPolynomial f = sign_power(bit(pa)) * eval(a.xi, b.f) -
                          sign_power(koszul(flip(pa), pb)) * eval(b.xi, a.f);
  return SemidirectElement(std::move(xi), std::move(f));
}

SemidirectElement internal_differential(const Derivation& d, const SemidirectElement& a) {
  require(d.parity() == Parity::Odd || d.is_zero(), ErrorCode::Parity, "differential must be odd");
  return SemidirectElement(bracket(d, a.xi), -eval(d, a.f));
}

SemidirectElement external_differential(const Derivation& xi) {
  require(xi.min_weight() >= 2, ErrorCode::Precondition, "external differential needs weight at least 2");
  return SemidirectElement(Derivation(xi.space(), xi.parity(), xi.cutoff()), Rational(1, 2) * divergence(xi));
}

SemidirectElement total_differential(const Derivation& d, const SemidirectElement& a) {
  return internal_differential(d, a) + external_differential(a.xi);
}

UnimodularReport check_unimodular(const UnimodularStructure& u) {
  const auto& s = u.base;
  require(*u.f.space() == *s.space(), ErrorCode::Space, "lift on a foreign space");
  require(u.f.is_zero() || u.f.parity() == Parity::Even, ErrorCode::Parity, "lift must be even");
  require(u.f.min_weight() >= 1, ErrorCode::Precondition, "lift must have weight at least 1");
  require(check_mc(s).ok, ErrorCode::Precondition, "structure does not satisfy the Maurer-Cartan equation");
  auto r = eval(s.total(), u.f) + Rational(1, 2) * divergence(s.m());
  UnimodularReport report;
  report.cutoff = r.cutoff();
  for (int w = 0; w <= r.cutoff(); ++w) {
    auto c = weight_component(r, w);
    if (!c.is_zero()) report.residual.emplace(w, std::move(c));
  }
  report.ok = report.residual.empty();
  report.strict = report.ok && u.f.is_zero();
  return report;
}

ObstructionReport obstruction_class(const LInftyStructure& s) {
  require(check_mc(s).ok, ErrorCode::Precondition, "structure does not satisfy the Maurer-Cartan equation");
  ObstructionReport out{.cocycle = divergence(s.m())};
  require(eval(s.total(), out.cocycle).is_zero(), ErrorCode::Precondition,
          "divergence is not a cocycle; the structure or the arithmetic is inconsistent");
  auto ce = ce_assemble(s.total(), 0);
  out.reliable_weight = ce.reliable_weight;
  if (out.cocycle.is_zero()) {
    out.vanishes = true;
    out.lift = TruncatedPolynomial(s.space(), out.cocycle.cutoff());
    auto sol = ce_solve(ce, TruncatedPolynomial(s.space(), out.cocycle.cutoff()), 1);
    out.lift_dimension = sol.kernel_dim;
    return out;
  }
  auto sol = ce_solve(ce, Rational(-1, 2) * out.cocycle, 1);
  out.vanishes = sol.solvable;
  out.lift = sol.solution;
  out.lift_dimension = sol.kernel_dim;
  out.certificate = sol.certificate;
  out.obstructed_at = sol.obstructed_at;
  return out;
}

bool lie_unimodular(const LieAlgebra& g) {
  require(check_mc(from_lie(g, 3)).ok, ErrorCode::Precondition, "bracket fails the Jacobi identity");
  for (std::size_t a = 0; a < g.space().dim(); ++a)
    if (!supertrace(g.ad(a)).is_zero()) return false;
  return true;
}

DimensionReport classify_dimension(const GradedSpace& v, int cutoff) {
  require(cutoff >= 1, ErrorCode::Precondition, "cutoff must be positive");
  SpacePtr gens = shifted_dual(v);
  DimensionReport out;
  out.cutoff = cutoff;
  if (gens->dim() > 0 && gens->even_dim() == 0) {
    if (gens->dim() % 2 == 0) out.expected = DimensionClass::Exceptional;
    Monomial top;
    for (std::uint32_t i = 0; i < gens->dim(); ++i) top.push_back(i);
    out.top = top;
  }
  std::vector<Monomial> targets;
  std::map<Monomial, std::size_t, MonomialLess> index;
  for (int t = 1; t <= cutoff; ++t)
    for (auto& m : monomials_of_weight(*gens, t)) {
      index.emplace(m, targets.size());
      targets.push_back(std::move(m));
    }
  Echelon image[2];  // by parity of the divergence
  for (int w = 2; w <= cutoff + 1; ++w)
    for (const auto& m : monomials_of_weight(*gens, w))
      for (std::size_t i = 0; i < gens->dim(); ++i) {
        TruncatedPolynomial value(gens, cutoff + 1);
        value.add_term(m, Rational(1));
        Derivation xi(gens, monomial_parity(*gens, m) + gens->parity(i), cutoff + 1);
        xi.set_value(i, value);
        const auto div = divergence(xi);
        SparseVector row;
        for (const auto& [mono, c] : div.terms())
          if (auto it = index.find(mono); it != index.end()) row.emplace(it->second, c);
        image[bit(xi.parity())].insert(row);
      }
  for (std::size_t k = 0; k < targets.size(); ++k) {
    Parity p = monomial_parity(*gens, targets[k]);
    if (image[bit(p)].contains({{k, Rational(1)}})) continue;
    out.missed.push_back(targets[k]);
  }
  std::size_t even_targets = 0;
  for (const auto& m : targets) even_targets += monomial_parity(*gens, m) == Parity::Even;
  out.even_cokernel_dim = even_targets - image[0].rank();
  out.cokernel_dim = targets.size() - image[0].rank() - image[1].rank();
  out.observed = out.even_cokernel_dim == 0 ? DimensionClass::Surjective : DimensionClass::Exceptional;
  return out;
}

}  // namespace linfty
