#include "linfty/tensor.hpp"

#include <cstdlib>

#include "linfty/errors.hpp"

namespace linfty {

namespace {

void check_vector(const GradedSpace& s, const SparseVector& v, Parity p, const std::string& what) {
  for (const auto& [k, c] : v) {
    require(k < s.dim(), ErrorCode::Shape, what + " out of range");
    require(s.parity(k) == p, ErrorCode::Parity, what + " has the wrong parity");
  }
}

}  // namespace

Cdga::Cdga(GradedSpace space, const Products& products, std::optional<LinearMap> differential,
           std::optional<std::size_t> unit, std::optional<BilinearForm> pairing)
    : space_(std::move(space)),
      d_(differential ? *differential : LinearMap::zero(space_, space_, Parity::Odd)),
      unit_(unit),
      pairing_(std::move(pairing)) {
  const std::size_t n = space_.dim();
  for (const auto& [ab, v] : products) {
    auto [a, b] = ab;
    require(a < n && b < n, ErrorCode::Shape, "product index out of range");
    check_vector(space_, v, space_.parity(a) + space_.parity(b), "product");
    SparseVector clean;
    for (const auto& [k, c] : v)
      if (!c.is_zero()) clean.emplace(k, c);
    if (clean.empty()) continue;
    SparseVector swapped;
    axpy(swapped, sign_power(koszul(space_.parity(a), space_.parity(b))), clean);
    for (auto [key, val] : {std::pair{ab, clean}, std::pair{std::pair{b, a}, swapped}}) {
      auto [it, fresh] = products_.try_emplace(key, val);
      require(fresh || it->second == val, ErrorCode::Shape, "product is not graded commutative");
    }
  }
  require(d_.source() == space_ && d_.target() == space_, ErrorCode::Space, "differential on a foreign space");
  require(d_.is_zero() || d_.parity() == Parity::Odd, ErrorCode::Parity, "differential must be odd");
  require(compose(d_, d_).is_zero(), ErrorCode::Precondition, "differential does not square to zero");
  const SparseMatrix dm = d_.matrix();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c)
        require(multiply(product(a, b), {{c, Rational(1)}}) == multiply({{a, Rational(1)}}, product(b, c)),
                ErrorCode::Precondition, "product is not associative");
      SparseVector lhs = dm.apply(product(a, b));
      SparseVector rhs = multiply(dm.apply({{a, Rational(1)}}), {{b, Rational(1)}});
      axpy(rhs, sign_power(bit(space_.parity(a))), multiply({{a, Rational(1)}}, dm.apply({{b, Rational(1)}})));
      require(lhs == rhs, ErrorCode::Precondition, "differential is not a derivation of the product");
    }
  if (unit_) {
    require(*unit_ < n && space_.parity(*unit_) == Parity::Even, ErrorCode::Precondition, "unit must be even");
    for (std::size_t a = 0; a < n; ++a)
      require(product(*unit_, a) == SparseVector{{a, Rational(1)}}, ErrorCode::Precondition, "unit law fails");
  }
  if (pairing_) {
    require(pairing_->space() == space_, ErrorCode::Space, "pairing on a foreign space");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Rational lhs, rhs;
          for (const auto& [k, v] : product(a, b)) lhs += v * pairing_->at(k, c);
          for (const auto& [k, v] : product(b, c)) rhs += v * pairing_->at(a, k);
          require(lhs == rhs, ErrorCode::Precondition, "pairing is not invariant");
        }
  }
}

SparseVector Cdga::product(std::size_t a, std::size_t b) const {
  auto it = products_.find({a, b});
  return it == products_.end() ? SparseVector{} : it->second;
}

SparseVector Cdga::multiply(const SparseVector& a, const SparseVector& b) const {
  SparseVector out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) axpy(out, x * y, product(i, j));
  return out;
}

LinearMap Cdga::multiplication(std::size_t a) const {
  LinearMap::Entries e;
  for (std::size_t b = 0; b < space_.dim(); ++b)
    for (const auto& [k, c] : product(a, b)) e[{k, b}] = c;
  return LinearMap(space_, space_, space_.parity(a), std::move(e));
}

Rational Cdga::euler_characteristic() const {
  return Rational(static_cast<long>(space_.even_dim()) - static_cast<long>(space_.odd_dim()));
}

namespace frobenius {

namespace {

BilinearForm top_pairing(const GradedSpace& s, std::size_t top, Parity p) {
  return BilinearForm(s, p, {{{0, top}, Rational(1)}});
}

}  // namespace

Cdga point() {
  GradedSpace s({{"1", Parity::Even}});
  return Cdga(s, {{{0, 0}, {{0, Rational(1)}}}}, std::nullopt, 0, top_pairing(s, 0, Parity::Even));
}

Cdga circle() {
  GradedSpace s({{"1", Parity::Even}, {"θ", Parity::Odd}});
  return Cdga(s, {{{0, 0}, {{0, Rational(1)}}}, {{0, 1}, {{1, Rational(1)}}}}, std::nullopt, 0,
              top_pairing(s, 1, Parity::Odd));
}

Cdga sphere2() {
  GradedSpace s({{"1", Parity::Even}, {"w", Parity::Even}});
  return Cdga(s, {{{0, 0}, {{0, Rational(1)}}}, {{0, 1}, {{1, Rational(1)}}}}, std::nullopt, 0,
              top_pairing(s, 1, Parity::Even));
}

Cdga sphere3() {
  GradedSpace s({{"1", Parity::Even}, {"v", Parity::Odd}});
  return Cdga(s, {{{0, 0}, {{0, Rational(1)}}}, {{0, 1}, {{1, Rational(1)}}}}, std::nullopt, 0,
              top_pairing(s, 1, Parity::Odd));
}

Cdga torus() {
  GradedSpace s({{"1", Parity::Even}, {"a", Parity::Odd}, {"b", Parity::Odd}, {"ω", Parity::Even}});
  Cdga::Products p{{{0, 0}, {{0, Rational(1)}}},
                   {{0, 1}, {{1, Rational(1)}}},
                   {{0, 2}, {{2, Rational(1)}}},
                   {{0, 3}, {{3, Rational(1)}}},
                   {{1, 2}, {{3, Rational(1)}}}};
  BilinearForm pairing(s, Parity::Even, {{{0, 3}, Rational(1)}, {{1, 2}, Rational(1)}});
  return Cdga(s, p, std::nullopt, 0, pairing);
}

std::vector<std::string> names() { return {"H_pt", "H_S1", "H_S2", "H_S3", "H_T2"}; }

Cdga by_name(const std::string& name) {
  if (name == "k" || name == "H_pt") return point();
  if (name == "H_S1") return circle();
  if (name == "H_S2") return sphere2();
  if (name == "H_S3") return sphere3();
  if (name == "H_T2") return torus();
  fail(ErrorCode::Input, "unknown Frobenius algebra '" + name + "'");
}

}  // namespace frobenius

bool cdga_unimodular(const Cdga& a) {
  for (std::size_t i = 0; i < a.space().dim(); ++i)
    if (!supertrace(a.multiplication(i)).is_zero()) return false;
  return true;
}

bool idempotent_criterion(const Cdga& a, const std::vector<SparseVector>& idempotents) {
  require(a.unit().has_value(), ErrorCode::Precondition, "idempotent criterion needs a unit");
  SparseVector sum;
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    check_vector(a.space(), idempotents[i], Parity::Even, "idempotent");
    axpy(sum, Rational(1), idempotents[i]);
    for (std::size_t j = 0; j < idempotents.size(); ++j) {
      auto p = a.multiply(idempotents[i], idempotents[j]);
      require(p == (i == j ? idempotents[i] : SparseVector{}), ErrorCode::Precondition,
              "idempotents are not orthogonal");
    }
  }
  require(sum == SparseVector{{*a.unit(), Rational(1)}}, ErrorCode::Precondition, "idempotents do not sum to 1");
  for (const auto& e : idempotents) {
    // e A is the image of multiplication by e, split by parity
    std::size_t dims[2] = {0, 0};
    for (Parity p : {Parity::Even, Parity::Odd}) {
      Echelon image;
      for (std::size_t b = 0; b < a.space().dim(); ++b)
        if (a.space().parity(b) == p) image.insert(a.multiply(e, {{b, Rational(1)}}));
      dims[bit(p)] = image.rank();
    }
    if (dims[0] != dims[1]) return false;
  }
  return true;
}

std::size_t tensor_dimension_cap() {
  if (const char* env = std::getenv("LINFTY_MAX_DIM")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    require(end != env && *end == '\0' && v > 0, ErrorCode::Input, "LINFTY_MAX_DIM must be a positive integer");
    return v;
  }
  return 64;
}

SpacePtr tensor_space(const Cdga& a, const GradedSpace& generators) {
  const std::size_t dim = a.space().dim() * generators.dim();
  require(dim <= tensor_dimension_cap(), ErrorCode::Size,
          "tensor product has dimension " + std::to_string(dim) + ", above the cap of " +
              std::to_string(tensor_dimension_cap()));
  std::vector<Generator> gens;
  for (const auto& e : a.space().basis())
    for (const auto& z : generators.basis()) gens.push_back({e.name + "⊗" + z.name, e.parity + z.parity});
  return make_space(std::move(gens));
}

namespace {

struct Split {
  std::vector<std::uint32_t> alg, gen;
};

Split split(const Monomial& m, std::size_t dim) {
  Split s;
  for (auto i : m) {
    s.alg.push_back(static_cast<std::uint32_t>(i / dim));
    s.gen.push_back(static_cast<std::uint32_t>(i % dim));
  }
  return s;
}

// Sign of (a_1 z_1)...(a_n z_n) -> (a_1...a_n)(z_1...z_n).
int shuffle_sign(const Cdga& a, const GradedSpace& g, const Split& s) {
  int k = 0;
  for (std::size_t i = 0; i < s.gen.size(); ++i)
    for (std::size_t j = i + 1; j < s.alg.size(); ++j)
      k += bit(g.parity(s.gen[i])) * bit(a.space().parity(s.alg[j]));
  return k % 2 ? -1 : 1;
}

SparseVector iterated_product(const Cdga& a, const std::vector<std::uint32_t>& alg) {
  SparseVector p{{alg[0], Rational(1)}};
  for (std::size_t i = 1; i < alg.size(); ++i) p = a.multiply(p, {{alg[i], Rational(1)}});
  return p;
}

Parity vector_parity(const GradedSpace& s, const SparseVector& v) {
  return v.empty() ? Parity::Even : s.parity(v.begin()->first);
}

void check_target(const Cdga& a, const SpacePtr& source, const SpacePtr& target) {
  require(target->dim() == a.space().dim() * source->dim(), ErrorCode::Space, "target is not the tensor space");
  for (std::size_t i = 0; i < target->dim(); ++i)
    require(target->parity(i) == a.space().parity(i / source->dim()) + source->parity(i % source->dim()),
            ErrorCode::Parity, "target is not the tensor space");
}

}  // namespace

Derivation psi(const Cdga& a, const Derivation& xi, SpacePtr target) {
  const GradedSpace& g = *xi.space();
  check_target(a, xi.space(), target);
  const std::size_t dim = g.dim();
  Derivation out(target, xi.parity(), xi.cutoff());
  for (int n = 1; n <= xi.cutoff(); ++n) {
    SymMultiMap m = to_multilinear(xi, n);
    if (m.entries().empty()) continue;
    SymMultiMap big(target, n, xi.parity());
    for (const auto& mono : monomials_of_weight(*target, n)) {
      Split s = split(mono, dim);
      SparseVector v = m.value(s.gen);
      if (v.empty()) continue;
      SparseVector p = iterated_product(a, s.alg);
      if (p.empty()) continue;
      Rational sign = shuffle_sign(a, g, s) * sign_power(koszul(xi.parity(), vector_parity(a.space(), p)));
      SparseVector value;
      for (const auto& [beta, x] : p)
        for (const auto& [b, y] : v) value[beta * dim + b] += sign * x * y;
      big.set(mono, value);
    }
    out += from_multilinear(big, xi.cutoff());
  }
  return out;
}

TruncatedPolynomial psi_prime(const Cdga& a, const TruncatedPolynomial& f, SpacePtr target) {
  check_target(a, f.space(), target);
  const GradedSpace& g = *f.space();
  const std::size_t dim = g.dim();
  std::vector<Rational> traces;
  for (std::size_t i = 0; i < a.space().dim(); ++i) traces.push_back(supertrace(a.multiplication(i)));
  TruncatedPolynomial out(target, f.cutoff());
  for (int n = std::max(1, f.min_weight()); n <= std::min(f.max_weight(), f.cutoff()); ++n)
    for (const auto& mono : monomials_of_weight(*target, n)) {
      Split s = split(mono, dim);
      Rational value = evaluate_symmetric(f, s.gen);
      if (value.is_zero()) continue;
      Rational tr;
      for (const auto& [beta, x] : iterated_product(a, s.alg)) tr += x * traces[beta];
      if (tr.is_zero()) continue;
      // only even products have nonzero supertrace, so f passes them without a sign
      out.add_term(mono, shuffle_sign(a, g, s) * tr * value / multiplicity_factor(mono));
    }
  return out;
}

LInftyStructure tensor_linfty(const Cdga& a, const LInftyStructure& s) {
  SpacePtr target = tensor_space(a, *s.space());
  const std::size_t dim = s.space()->dim();
  Derivation d = psi(a, s.d(), target);
  // d_A (x) 1
  SymMultiMap da(target, 1, Parity::Odd);
  const SparseMatrix dm = a.differential().matrix();
  for (std::size_t alpha = 0; alpha < a.space().dim(); ++alpha) {
    SparseVector image = dm.apply({{alpha, Rational(1)}});
    if (image.empty()) continue;
    for (std::size_t z = 0; z < dim; ++z) {
      SparseVector v;
      for (const auto& [beta, c] : image) v[beta * dim + z] = c;
      da.set({static_cast<std::uint32_t>(alpha * dim + z)}, v);
    }
  }
  d += from_multilinear(da, s.cutoff());
  return LInftyStructure(target, d, psi(a, s.m(), target));
}

CyclicData tensor_pairing(const Cdga& a, const CyclicData& c) {
  require(a.pairing().has_value(), ErrorCode::Precondition, "algebra has no pairing");
  const BilinearForm& pa = *a.pairing();
  const BilinearForm& pv = c.form();
  const GradedSpace& v = pv.space();
  std::vector<Generator> basis;
  for (const auto& e : a.space().basis())
    for (const auto& x : v.basis()) basis.push_back({e.name + "⊗" + x.name, e.parity + x.parity});
  GradedSpace av(std::move(basis));
  const std::size_t dim = v.dim();
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries;
  for (const auto& [ab, x] : pa.entries())
    for (const auto& [ij, y] : pv.entries()) {
      auto [alpha, beta] = ab;
      auto [i, j] = ij;
      const Parity first = a.space().parity(alpha);
      entries[{alpha * dim + i, beta * dim + j}] =
          sign_power(koszul(first, v.parity(j) + a.space().parity(beta))) * x * y;
    }
  return CyclicData(BilinearForm(av, pa.parity() + pv.parity(), entries));
}

}  // namespace linfty
