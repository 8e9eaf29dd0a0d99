#include "linfty/quantum.hpp"

#include "linfty/errors.hpp"

namespace linfty {

namespace {

int word_cutoff(int weight_cutoff, int g) { return weight_cutoff - 2 * g; }

void check_weights(const TruncatedPolynomial& s, int g) {
  for (const auto& [m, c] : s.terms())
    require(2 * g + static_cast<int>(m.size()) > 2, ErrorCode::Precondition,
            "genus " + std::to_string(g) + " component has a term of weight at most 2");
}

TruncatedPolynomial zero_like(const SpacePtr& s, int cutoff) { return TruncatedPolynomial(s, cutoff); }

}  // namespace

QuantumStructure::QuantumStructure(PoissonStructure poisson, Derivation d, std::vector<TruncatedPolynomial> genus,
                                   int weight_cutoff)
    : poisson_(std::move(poisson)), d_(std::move(d)), genus_(std::move(genus)), weight_cutoff_(weight_cutoff) {
  require(poisson_.parity() == Parity::Odd, ErrorCode::Parity, "quantum structures need an odd bracket");
  require(poisson_.nondegenerate(), ErrorCode::Precondition, "odd bracket is degenerate");
  require(!genus_.empty(), ErrorCode::Shape, "at least the genus 0 component is required");
  require(weight_cutoff_ >= 2 * genus_cutoff(), ErrorCode::Truncation, "weight cutoff too small for the genus");
  require(*d_.space() == *space(), ErrorCode::Space, "differential on a foreign space");
  require(d_.is_zero() || d_.parity() == Parity::Odd, ErrorCode::Parity, "differential must be odd");
  for (const auto& v : d_.values())
    for (const auto& [m, c] : v.terms()) require(m.size() == 1, ErrorCode::Precondition, "differential must be linear");
  require(bracket(d_, d_).is_zero(), ErrorCode::Precondition, "differential does not square to zero");
  require(preserves_poisson(d_, poisson_), ErrorCode::Precondition, "differential does not preserve the bracket");
  for (int g = 0; g <= genus_cutoff(); ++g) {
    auto& s = genus_[g];
    require(*s.space() == *space(), ErrorCode::Space, "genus component on a foreign space");
    require(s.is_zero() || s.parity() == Parity::Even, ErrorCode::Parity, "genus components must be even");
    require(s.cutoff() >= word_cutoff(weight_cutoff_, g), ErrorCode::Truncation,
            "genus " + std::to_string(g) + " component is not known through the weight cutoff");
    s = truncate(s, word_cutoff(weight_cutoff_, g));
    check_weights(s, g);
  }
  d_ = truncate(d_, word_cutoff(weight_cutoff_, 0));
}

QuantumStructure::QuantumStructure(PoissonStructure poisson, std::vector<TruncatedPolynomial> genus, int weight_cutoff)
    : QuantumStructure(poisson, Derivation(poisson.space(), Parity::Odd, weight_cutoff), std::move(genus),
                       weight_cutoff) {}

TruncatedPolynomial qme_source(const QuantumStructure& q, int g) {
  require(g >= 1 && g <= q.genus_cutoff() + 1, ErrorCode::Shape, "genus out of range");
  const int top = word_cutoff(q.weight_cutoff(), g);
  auto out = laplacian(q.poisson(), q.at(g - 1));
  for (int i = 1; i < g; ++i) {
    if (g - i > q.genus_cutoff()) continue;
    out += Rational(1, 2) * poisson_bracket(q.poisson(), q.at(i), q.at(g - i));
  }
  return truncate(out, std::min(top, out.cutoff()));
}

QmeReport check_qme(const QuantumStructure& q) {
  QmeReport report;
  for (int g = 0; g <= q.genus_cutoff(); ++g) {
    const int top = word_cutoff(q.weight_cutoff(), g);
    auto r = eval(q.d(), q.at(g)) + poisson_bracket(q.poisson(), q.at(0), q.at(g));
    if (g == 0) r = eval(q.d(), q.at(0)) + Rational(1, 2) * poisson_bracket(q.poisson(), q.at(0), q.at(0));
    else r += qme_source(q, g);
    r = truncate(r, std::min(top, r.cutoff()));
    for (int n = 0; n <= r.cutoff(); ++n) {
      auto c = weight_component(r, n);
      if (!c.is_zero()) report.residual.emplace(std::pair{g, 2 * g + n}, std::move(c));
    }
  }
  report.ok = report.residual.empty();
  return report;
}

QuantumLift quantum_lift(const PoissonStructure& p, const TruncatedPolynomial& s0, int genus, int weight_cutoff) {
  return quantum_lift(p, Derivation(p.space(), Parity::Odd, weight_cutoff), s0, genus, weight_cutoff);
}

QuantumLift quantum_lift(const PoissonStructure& p, const Derivation& d, const TruncatedPolynomial& s0, int genus,
                         int weight_cutoff) {
  require(genus >= 0, ErrorCode::Precondition, "genus must be nonnegative");
  QuantumStructure base(p, d, {s0}, weight_cutoff);
  require(check_qme(base).ok, ErrorCode::Precondition, "S_0 does not satisfy the classical master equation");
  const Derivation q = base.d() + hamiltonian_field(p, base.at(0));
  const auto ce = ce_assemble(q, 0);
  QuantumLift out;
  out.reliable_weight = ce.reliable_weight;
  std::vector<TruncatedPolynomial> parts{base.at(0)};
  for (int g = 1; g <= genus; ++g) {
    const int top = word_cutoff(weight_cutoff, g);
    require(top >= 0, ErrorCode::Truncation, "weight cutoff too small for the genus");
    QuantumStructure partial(p, base.d(), parts, weight_cutoff);
    auto c = qme_source(partial, g);
    // closed because the lower orders satisfy the QME
    auto qc = eval(q, c);
    require(truncate(qc, std::min(qc.cutoff(), top)).is_zero(), ErrorCode::Precondition,
            "genus " + std::to_string(g) + " source is not closed");
    if (c.is_zero()) {
      parts.push_back(zero_like(p.space(), top));
      out.solution_dims.push_back(ce_solve(ce, zero_like(p.space(), top), g == 1 ? 1 : 0).kernel_dim);
      continue;
    }
    auto sol = ce_solve(ce, -c, g == 1 ? 1 : 0);
    if (!sol.solvable) {
      out.obstructed_genus = g;
      out.obstruction = c;
      out.certificate = sol.certificate;
      out.obstructed_at = sol.obstructed_at;
      out.structure = QuantumStructure(p, base.d(), parts, weight_cutoff);
      return out;
    }
    out.solution_dims.push_back(sol.kernel_dim);
    auto s = *sol.solution;
    // solutions are only determined through the source's cutoff
    require(s.cutoff() >= top, ErrorCode::Truncation, "genus " + std::to_string(g) + " solved below the cutoff");
    parts.push_back(truncate(s, top));
  }
  out.ok = true;
  out.structure = QuantumStructure(p, base.d(), parts, weight_cutoff);
  return out;
}

TruncatedPolynomial hamiltonian_of_structure(const Derivation& m, const PoissonStructure& p) {
  require(*m.space() == *p.space(), ErrorCode::Space, "structure on a foreign space");
  require(p.nondegenerate(), ErrorCode::Precondition, "bracket is degenerate");
  const SpacePtr& s = p.space();
  const int N = m.cutoff();
  TruncatedPolynomial zero(s, N + 1);
  if (m.is_zero()) return zero;
  // X_S has parity |S| + |P|
  const Parity ps = m.parity() + p.parity();
  std::vector<Monomial> cols;
  for (int w = 1; w <= N + 1; ++w)
    for (auto& mono : monomials_of_weight(*s, w))
      if (monomial_parity(*s, mono) == ps) cols.push_back(std::move(mono));
  std::map<std::pair<std::size_t, Monomial>, std::size_t> rows;
  auto row_of = [&](std::size_t a, const Monomial& mono) { return rows.try_emplace({a, mono}, rows.size()).first->second; };
  std::vector<SparseVector> columns;
  for (const auto& mono : cols) {
    TruncatedPolynomial h(s, N + 1);
    h.add_term(mono, Rational(1));
    auto x = hamiltonian_field(p, h);
    SparseVector col;
    for (std::size_t a = 0; a < s->dim(); ++a)
      for (const auto& [t, c] : x.value(a).terms()) col.emplace(row_of(a, t), c);
    columns.push_back(std::move(col));
  }
  SparseVector rhs;
  for (std::size_t a = 0; a < s->dim(); ++a)
    for (const auto& [t, c] : m.value(a).terms()) rhs.emplace(row_of(a, t), c);
  SparseMatrix a(rows.size(), cols.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [i, c] : columns[j]) a.add(i, j, c);
  auto sol = solve(a, rhs);
  require(sol.solvable, ErrorCode::Precondition, "structure is not Hamiltonian for this bracket");
  TruncatedPolynomial out(s, N + 1);
  for (std::size_t j = 0; j < cols.size(); ++j) out.add_term(cols[j], sol.solution[j]);
  return out;
}

TruncatedPolynomial hamiltonian_of_structure(const Derivation& m, const CyclicData& c) {
  return hamiltonian_of_structure(m, c.poisson(m.space()));
}

}  // namespace linfty
