#include "linfty/linfty.hpp"

#include <algorithm>

#include "linfty/errors.hpp"

namespace linfty {

LieAlgebra::LieAlgebra(GradedSpace space, const Brackets& brackets) : space_(std::move(space)) {
  const std::size_t n = space_.dim();
  for (const auto& [ab, v] : brackets) {
    auto [a, b] = ab;
    require(a < n && b < n, ErrorCode::Shape, "bracket index out of range");
    SparseVector clean;
    for (const auto& [k, c] : v) {
      require(k < n, ErrorCode::Shape, "bracket output out of range");
      if (c.is_zero()) continue;
      require(space_.parity(k) == space_.parity(a) + space_.parity(b), ErrorCode::Parity,
              "bracket [" + space_.name(a) + "," + space_.name(b) + "] has the wrong parity");
      clean.emplace(k, c);
    }
    if (clean.empty()) continue;
    SparseVector mirrored;
    axpy(mirrored, -sign_power(koszul(space_.parity(a), space_.parity(b))), clean);
    for (auto [key, val] : {std::pair{ab, clean}, std::pair{std::pair{b, a}, mirrored}}) {
      auto [it, fresh] = brackets_.try_emplace(key, val);
      require(fresh || it->second == val, ErrorCode::Shape,
              "brackets [" + space_.name(a) + "," + space_.name(b) + "] violate graded antisymmetry");
    }
  }
}

SparseVector LieAlgebra::bracket(std::size_t a, std::size_t b) const {
  auto it = brackets_.find({a, b});
  return it == brackets_.end() ? SparseVector{} : it->second;
}

LinearMap LieAlgebra::ad(std::size_t a) const {
  LinearMap::Entries e;
  for (std::size_t b = 0; b < space_.dim(); ++b)
    for (const auto& [k, c] : bracket(a, b)) e[{k, b}] = c;
  return LinearMap(space_, space_, space_.parity(a), std::move(e));
}

namespace lie {

LieAlgebra abelian(int n) {
  std::vector<Generator> basis;
  for (int i = 0; i < n; ++i) basis.push_back({"e" + std::to_string(i + 1), Parity::Even});
  return LieAlgebra(GradedSpace(std::move(basis)), {});
}

LieAlgebra heisenberg() {
  GradedSpace v({{"x", Parity::Even}, {"y", Parity::Even}, {"z", Parity::Even}});
  return LieAlgebra(v, {{{0, 1}, {{2, Rational(1)}}}});
}

LieAlgebra affine_line() {
  GradedSpace v({{"x", Parity::Even}, {"y", Parity::Even}});
  return LieAlgebra(v, {{{0, 1}, {{1, Rational(1)}}}});
}

LieAlgebra sl2() {
  GradedSpace v({{"h", Parity::Even}, {"e", Parity::Even}, {"f", Parity::Even}});
  return LieAlgebra(v, {{{0, 1}, {{1, Rational(2)}}}, {{0, 2}, {{2, Rational(-2)}}}, {{1, 2}, {{0, Rational(1)}}}});
}

}  // namespace lie

LInftyStructure::LInftyStructure(SpacePtr space, Derivation d, Derivation m)
    : space_(std::move(space)), d_(std::move(d)), m_(std::move(m)) {
  require(*d_.space() == *space_ && *m_.space() == *space_, ErrorCode::Space, "structure on a foreign space");
  require(d_.is_zero() || d_.parity() == Parity::Odd, ErrorCode::Parity, "differential must be odd");
  require(m_.is_zero() || m_.parity() == Parity::Odd, ErrorCode::Parity, "structure must be odd");
  for (const auto& v : d_.values())
    for (const auto& [mono, c] : v.terms())
      require(mono.size() == 1, ErrorCode::Precondition, "differential must be linear");
  require(m_.is_zero() || m_.min_weight() >= 2, ErrorCode::Precondition, "higher brackets must have weight at least 2");
  require(bracket(d_, d_).is_zero(), ErrorCode::Precondition, "differential does not square to zero");
  d_ = truncate(d_, m_.cutoff());
}

int LInftyStructure::top_arity() const {
  int top = 1;
  for (const auto& v : m_.values()) top = std::max(top, v.max_weight());
  return top;
}

SpacePtr shifted_dual(const GradedSpace& v) {
  std::vector<Generator> gens;
  for (const auto& g : v.basis()) gens.push_back({g.name + "'", flip(g.parity)});
  return make_space(std::move(gens));
}

LInftyStructure from_lie(const LieAlgebra& g, int cutoff) {
  SpacePtr gens = shifted_dual(g.space());
  SymMultiMap m2(gens, 2, Parity::Odd);
  const std::size_t n = g.space().dim();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a; b < n; ++b) {
      SparseVector out;
      axpy(out, -sign_power(bit(g.space().parity(a))), g.bracket(a, b));
      if (out.empty()) continue;
      m2.set({a, b}, out);
    }
  return LInftyStructure(gens, Derivation(gens, Parity::Odd, cutoff), from_multilinear(m2, cutoff));
}

LInftyStructure from_brackets(SpacePtr space, const std::vector<SymMultiMap>& brackets, int cutoff) {
  Derivation d(space, Parity::Odd, cutoff), m(space, Parity::Odd, cutoff);
  for (const auto& b : brackets) {
    require(*b.space() == *space, ErrorCode::Space, "bracket on a foreign space");
    require(b.parity() == Parity::Odd || b.entries().empty(), ErrorCode::Parity, "brackets must be odd");
    if (b.arity() > cutoff) continue;
    (b.arity() == 1 ? d : m) += from_multilinear(b, cutoff);
  }
  return LInftyStructure(std::move(space), std::move(d), std::move(m));
}

McReport check_mc(const LInftyStructure& s) {
  Derivation q = s.total();
  Derivation r = Rational(1, 2) * bracket(q, q);
  McReport report;
  report.cutoff = r.cutoff();
  for (int w = 0; w <= r.cutoff(); ++w) {
    Derivation c = weight_component(r, w);
    if (!c.is_zero()) report.residual.emplace(w, std::move(c));
  }
  report.ok = report.residual.empty();
  return report;
}

CyclicData::CyclicData(BilinearForm form) : form_(std::move(form)) {
  require(form_.nondegenerate(), ErrorCode::Precondition, "cyclic pairing must be nondegenerate");
}

namespace {

std::map<std::pair<std::size_t, std::size_t>, Rational> inverse_entries(const SparseMatrix& m) {
  std::map<std::pair<std::size_t, std::size_t>, Rational> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto r = solve(m, {{c, Rational(1)}});
    require(r.solvable, ErrorCode::Precondition, "matrix is not invertible");
    for (std::size_t i = 0; i < m.cols(); ++i)
      if (!r.solution[i].is_zero()) out[{i, c}] = r.solution[i];
  }
  return out;
}

}  // namespace

PoissonStructure CyclicData::poisson(SpacePtr generators) const {
  require(*generators == parity_reverse(form_.space()) ||
              generators->dim() == form_.space().dim(),
          ErrorCode::Space, "pairing does not match the generators");
  for (std::size_t i = 0; i < generators->dim(); ++i)
    require(generators->parity(i) == flip(form_.space().parity(i)), ErrorCode::Parity,
            "pairing space is not the parity shift of the generators");
  return PoissonStructure(std::move(generators), form_.parity(), inverse_entries(form_.matrix()));
}

CyclicData cyclic_from_poisson(const PoissonStructure& p) {
  SparseMatrix m(p.space()->dim(), p.space()->dim());
  for (const auto& [ab, v] : p.entries()) m.add(ab.first, ab.second, v);
  std::vector<Generator> v;
  for (const auto& g : p.space()->basis()) v.push_back({g.name, flip(g.parity)});
  return CyclicData(BilinearForm(GradedSpace(std::move(v)), p.parity(), inverse_entries(m)));
}

CyclicReport check_cyclic(const Derivation& xi, const CyclicData& c) {
  const GradedSpace& s = *xi.space();
  require(s.dim() == c.form().space().dim(), ErrorCode::Space, "pairing does not match the structure");
  for (std::size_t i = 0; i < s.dim(); ++i)
    require(s.parity(i) == flip(c.form().space().parity(i)), ErrorCode::Parity,
            "pairing space is not the parity shift of the generators");
  const BilinearForm& g = c.form();
  for (int n = 1; n <= xi.cutoff(); ++n) {
    SymMultiMap m = to_multilinear(xi, n);
    if (m.entries().empty()) continue;
    auto tensor = [&](const std::vector<std::uint32_t>& in, std::uint32_t last) {
      Rational t;
      for (const auto& [k, v] : m.value(in))
        t += v * g.at(k, last) * sign_power(bit(s.parity(k)) * (1 + bit(s.parity(last))));
      return t;
    };
    for (const auto& head : monomials_of_weight(s, n - 1))
      for (std::uint32_t u = 0; u < s.dim(); ++u)
        for (std::uint32_t w = u; w < s.dim(); ++w) {
          auto a = head, b = head;
          a.push_back(u);
          b.push_back(w);
          if (tensor(a, w) != sign_power(koszul(s.parity(u), s.parity(w))) * tensor(b, u)) {
            a.push_back(w);
            return {false, n, a};
          }
        }
  }
  return {true, 0, {}};
}

CyclicReport check_cyclic(const LInftyStructure& s, const CyclicData& c) { return check_cyclic(s.total(), c); }

bool preserves_poisson(const Derivation& xi, const PoissonStructure& p) {
  const auto& space = p.space();
  require(*xi.space() == *space, ErrorCode::Space, "derivation on a foreign space");
  const Rational first = p.parity() == Parity::Odd ? sign_power(bit(xi.parity())) : Rational(1);
  const int N = xi.cutoff();
  for (std::size_t a = 0; a < space->dim(); ++a) {
    auto za = TruncatedPolynomial::generator(space, a, N);
    for (std::size_t b = 0; b < space->dim(); ++b) {
      auto zb = TruncatedPolynomial::generator(space, b, N);
      auto r = first * poisson_bracket(p, xi.value(a), zb) +
               sign_power(koszul(xi.parity(), space->parity(a) + p.parity())) * poisson_bracket(p, za, xi.value(b));
      if (!r.is_zero()) return false;
    }
  }
  return true;
}

SparseVector CeComplex::vector(const TruncatedPolynomial& f) const {
  SparseVector v;
  for (const auto& [m, c] : f.terms()) {
    if (static_cast<int>(m.size()) > cutoff) continue;
    auto it = index.find(m);
    require(it != index.end(), ErrorCode::Truncation, "element has weight below the complex");
    v.emplace(it->second, c);
  }
  return v;
}

TruncatedPolynomial CeComplex::polynomial(const SparseVector& v) const {
  TruncatedPolynomial f(space, cutoff);
  for (const auto& [i, c] : v) f.add_term(basis[i], c);
  return f;
}

CeComplex ce_assemble(const Derivation& q, int min_weight) {
  CeComplex ce;
  ce.space = q.space();
  ce.cutoff = q.cutoff();
  ce.min_weight = std::max(min_weight, 0);
  int top = 1;
  std::optional<int> shift;
  bool homogeneous = true;
  for (const auto& v : q.values())
    for (const auto& [m, c] : v.terms()) {
      top = std::max(top, static_cast<int>(m.size()));
      int s = static_cast<int>(m.size()) - 1;
      if (shift && *shift != s) homogeneous = false;
      shift = s;
    }
  if (homogeneous) ce.weight_shift = shift.value_or(0);
  ce.reliable_weight = ce.cutoff - top + 1;
  for (int w = ce.min_weight; w <= ce.cutoff; ++w)
    for (auto& m : monomials_of_weight(*ce.space, w)) {
      ce.index.emplace(m, ce.basis.size());
      ce.basis.push_back(std::move(m));
    }
  ce.q = SparseMatrix(ce.basis.size(), ce.basis.size());
  for (std::size_t j = 0; j < ce.basis.size(); ++j) {
    TruncatedPolynomial f(ce.space, ce.cutoff);
    f.add_term(ce.basis[j], Rational(1));
    const auto image = eval(q, f);
    for (const auto& [m, c] : image.terms())
      if (static_cast<int>(m.size()) <= ce.cutoff) ce.q.add(ce.index.at(m), j, c);
  }
  return ce;
}

CeComplex ce_assemble(const LInftyStructure& s, int min_weight) {
  require(check_mc(s).ok, ErrorCode::Precondition, "structure does not satisfy the Maurer-Cartan equation");
  return ce_assemble(s.total(), min_weight);
}

namespace {

struct Block {
  std::vector<std::size_t> rows, cols;  // global basis indices
  SparseMatrix matrix{0, 0};
};

Block restrict(const CeComplex& ce, Parity row_parity, Parity col_parity, int col_min_weight, int max_weight) {
  Block b;
  std::map<std::size_t, std::size_t> row_of;
  for (std::size_t i = 0; i < ce.basis.size(); ++i) {
    int w = static_cast<int>(ce.basis[i].size());
    if (w > max_weight) continue;
    Parity p = monomial_parity(*ce.space, ce.basis[i]);
    if (p == row_parity) {
      row_of[i] = b.rows.size();
      b.rows.push_back(i);
    }
    if (p == col_parity && w >= col_min_weight) b.cols.push_back(i);
  }
  b.matrix = SparseMatrix(b.rows.size(), b.cols.size());
  auto t = ce.q.transpose();
  for (std::size_t j = 0; j < b.cols.size(); ++j)
    for (const auto& [r, c] : t.row(b.cols[j])) {
      auto it = row_of.find(r);
      if (it != row_of.end()) b.matrix.add(it->second, j, c);
    }
  return b;
}

}  // namespace

CeSolution ce_solve(const CeComplex& ce, const TruncatedPolynomial& c, int min_weight) {
  require(*c.space() == *ce.space, ErrorCode::Space, "right-hand side on a foreign space");
  auto pc = c.parity();
  require(pc.has_value(), ErrorCode::Parity, "right-hand side must be homogeneous");
  // Q does not lower weight, so the quotient through c's cutoff is again a complex.
  const int top = std::min(c.cutoff(), ce.cutoff);
  SparseVector cv = ce.vector(truncate(c, top));
  for (const auto& [i, v] : ce.q.apply(cv))
    require(static_cast<int>(ce.basis[i].size()) > top, ErrorCode::Precondition, "right-hand side is not closed");
  CeSolution out;
  auto attempt = [&](int max_weight) {
    Block b = restrict(ce, *pc, flip(*pc), min_weight, max_weight);
    SparseVector rhs;
    for (std::size_t i = 0; i < b.rows.size(); ++i)
      if (auto it = cv.find(b.rows[i]); it != cv.end()) rhs.emplace(i, it->second);
    return std::pair{b, solve(b.matrix, rhs)};
  };
  auto [block, result] = attempt(top);
  if (result.solvable) {
    out.solvable = true;
    out.kernel_dim = block.cols.size() - rank(block.matrix);
    TruncatedPolynomial h(ce.space, top);
    for (std::size_t j = 0; j < block.cols.size(); ++j) h.add_term(ce.basis[block.cols[j]], result.solution[j]);
    out.solution = std::move(h);
    return out;
  }
  TruncatedPolynomial cert(ce.space, top);
  for (const auto& [i, v] : result.certificate) cert.add_term(ce.basis[block.rows[i]], v);
  out.certificate = std::move(cert);
  for (int w = ce.min_weight; w <= top; ++w) {
    if (!attempt(w).second.solvable) {
      out.obstructed_at = w;
      break;
    }
  }
  return out;
}

CeCohomology ce_cohomology(const CeComplex& ce) {
  CeCohomology h;
  std::size_t count[2] = {0, 0}, rk[2] = {0, 0};
  for (const auto& m : ce.basis) ++count[bit(monomial_parity(*ce.space, m))];
  for (Parity p : {Parity::Even, Parity::Odd})
    rk[bit(p)] = rank(restrict(ce, flip(p), p, ce.min_weight, ce.cutoff).matrix);
  h.even = count[0] - rk[0] - rk[1];
  h.odd = count[1] - rk[1] - rk[0];
  if (ce.weight_shift && *ce.weight_shift > 0) {
    const int r = *ce.weight_shift;
    for (int w = ce.min_weight; w + r <= ce.cutoff; ++w) {
      std::size_t dims[2];
      for (Parity p : {Parity::Even, Parity::Odd}) {
        std::vector<std::size_t> src, prev;
        for (std::size_t i = 0; i < ce.basis.size(); ++i) {
          if (monomial_parity(*ce.space, ce.basis[i]) != p) {
            if (static_cast<int>(ce.basis[i].size()) == w - r) prev.push_back(i);
            continue;
          }
          if (static_cast<int>(ce.basis[i].size()) == w) src.push_back(i);
        }
        auto t = ce.q.transpose();
        auto rank_of = [&](const std::vector<std::size_t>& cols) {
          Echelon e;
          for (auto c : cols) e.insert(t.row(c));
          return e.rank();
        };
        dims[bit(p)] = src.size() - rank_of(src) - rank_of(prev);
      }
      h.by_weight[w] = {dims[0], dims[1]};
    }
  }
  return h;
}

}  // namespace linfty
