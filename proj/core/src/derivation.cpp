#include "linfty/derivation.hpp"

#include <algorithm>
#include <limits>

#include "linfty/errors.hpp"

namespace linfty {

Derivation::Derivation(SpacePtr space, Parity parity, int cutoff) : space_(std::move(space)), parity_(parity) {
  for (std::size_t i = 0; i < space_->dim(); ++i) values_.emplace_back(space_, cutoff);
}

Derivation::Derivation(SpacePtr space, Parity parity, std::vector<TruncatedPolynomial> values)
    : space_(std::move(space)), parity_(parity) {
  require(values.size() == space_->dim(), ErrorCode::Shape, "derivation needs one value per generator");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require_same_space(values[i], TruncatedPolynomial(space_, 0));
    require(values[i].has_parity(space_->parity(i) + parity_), ErrorCode::Parity,
            "value on " + space_->name(i) + " has the wrong parity");
  }
  values_ = std::move(values);
}

Derivation Derivation::linear(SpacePtr space, const LinearMap& m, int cutoff) {
  require(m.source() == *space && m.target() == *space, ErrorCode::Space, "linear field of a foreign map");
  Derivation d(space, m.parity(), cutoff);
  for (const auto& [rc, v] : m.entries()) d.values_[rc.second].add_term({static_cast<std::uint32_t>(rc.first)}, v);
  return d;
}

Derivation Derivation::coordinate(SpacePtr space, std::size_t i, int cutoff) {
  Derivation d(space, space->parity(i), cutoff);
  d.values_[i].add_term({}, Rational(1));
  return d;
}

int Derivation::cutoff() const {
  int c = std::numeric_limits<int>::max();
  for (const auto& v : values_) c = std::min(c, v.cutoff());
  return values_.empty() ? 0 : c;
}

int Derivation::min_weight() const {
  int w = std::numeric_limits<int>::max();
  for (const auto& v : values_) w = std::min(w, v.min_weight());
  return values_.empty() ? 0 : w;
}

bool Derivation::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.is_zero(); });
}

void Derivation::set_value(std::size_t i, TruncatedPolynomial v) {
  require(v.has_parity(space_->parity(i) + parity_), ErrorCode::Parity,
          "value on " + space_->name(i) + " has the wrong parity");
  values_.at(i) = std::move(v);
}

Derivation& Derivation::operator+=(const Derivation& o) {
  require(*space_ == *o.space_, ErrorCode::Space, "derivations on different spaces");
  if (o.is_zero()) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = truncate(values_[i], o.values_[i].cutoff());
    return *this;
  }
  if (is_zero()) parity_ = o.parity_;
  require(parity_ == o.parity_, ErrorCode::Parity, "adding derivations of different parity");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) { return *this += Rational(-1) * o; }

Derivation operator*(const Rational& s, const Derivation& d) {
  Derivation r = d;
  for (auto& v : r.values_) v = s * v;
  return r;
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (!(*a.space_ == *b.space_)) return false;
  if (!a.is_zero() && !b.is_zero() && a.parity_ != b.parity_) return false;
  for (std::size_t i = 0; i < a.values_.size(); ++i)
    if (!(a.values_[i] == b.values_[i])) return false;
  return true;
}

Derivation truncate(const Derivation& d, int cutoff) {
  std::vector<TruncatedPolynomial> v;
  for (const auto& x : d.values()) v.push_back(truncate(x, cutoff));
  return Derivation(d.space(), d.parity(), std::move(v));
}

Derivation weight_component(const Derivation& d, int w) {
  std::vector<TruncatedPolynomial> v;
  for (const auto& x : d.values()) v.push_back(weight_component(x, w));
  return Derivation(d.space(), d.parity(), std::move(v));
}

TruncatedPolynomial eval(const Derivation& xi, const TruncatedPolynomial& f) {
  require_same_space(f, TruncatedPolynomial(xi.space(), 0));
  const int cap = std::min(xi.cutoff(), f.cutoff());
  TruncatedPolynomial out(xi.space(), cap);
  bool first = true;
  for (std::size_t i = 0; i < xi.space()->dim(); ++i) {
    TruncatedPolynomial term = multiply_bounded(xi.value(i), partial(f, i), cap);
    if (first) {
      out = term;
      first = false;
    } else {
      out += term;
    }
  }
  return out;
}

Derivation bracket(const Derivation& xi, const Derivation& eta) {
  require(*xi.space() == *eta.space(), ErrorCode::Space, "bracket of derivations on different spaces");
  const Rational s = sign_power(koszul(xi.parity(), eta.parity()));
  std::vector<TruncatedPolynomial> values;
  for (std::size_t i = 0; i < xi.space()->dim(); ++i)
    values.push_back(eval(xi, eta.value(i)) - s * eval(eta, xi.value(i)));
  return Derivation(xi.space(), xi.parity() + eta.parity(), std::move(values));
}

TruncatedPolynomial divergence(const Derivation& xi) {
  const GradedSpace& space = *xi.space();
  TruncatedPolynomial out(xi.space(), xi.cutoff() - 1);
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const bool odd_generator = space.parity(i) == Parity::Odd;
    for (const auto& [m, c] : xi.value(i).terms()) {
      TruncatedPolynomial t(xi.space(), xi.cutoff());
      t.add_term(m, c);
      bool flip_sign = odd_generator && monomial_parity(space, m) == Parity::Odd;
      out += flip_sign ? -partial(t, i) : partial(t, i);
    }
  }
  return out;
}

int koszul_sort_sign(const GradedSpace& space, std::vector<std::uint32_t> inputs) {
  return normalize(space, std::move(inputs)).sign;
}

Rational multiplicity_factor(const std::vector<std::uint32_t>& sorted) {
  Rational f(1);
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    f *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return f;
}

SymMultiMap::SymMultiMap(SpacePtr space, int arity, Parity parity)
    : space_(std::move(space)), arity_(arity), parity_(parity) {}

SparseVector SymMultiMap::value(const std::vector<std::uint32_t>& inputs) const {
  require(static_cast<int>(inputs.size()) == arity_, ErrorCode::Shape, "wrong number of inputs");
  auto n = normalize(*space_, inputs);
  if (n.sign == 0) return {};
  auto it = entries_.find(n.monomial);
  if (it == entries_.end()) return {};
  SparseVector out = it->second;
  if (n.sign < 0)
    for (auto& [k, v] : out) v = -v;
  return out;
}

void SymMultiMap::set(const std::vector<std::uint32_t>& inputs, const SparseVector& out) {
  require(static_cast<int>(inputs.size()) == arity_, ErrorCode::Shape, "wrong number of inputs");
  auto n = normalize(*space_, inputs);
  require(n.sign != 0, ErrorCode::Shape, "repeated odd input in a symmetric map");
  Parity in = monomial_parity(*space_, n.monomial);
  SparseVector v;
  for (const auto& [k, c] : out) {
    if (c.is_zero()) continue;
    require(k < space_->dim(), ErrorCode::Shape, "output index out of range");
    require(space_->parity(k) == in + parity_, ErrorCode::Parity, "multilinear entry has the wrong parity");
    v.emplace(k, n.sign < 0 ? -c : c);
  }
  if (v.empty()) entries_.erase(n.monomial);
  else entries_[n.monomial] = std::move(v);
}

SymMultiMap to_multilinear(const Derivation& xi, int n) {
  require(n >= 1, ErrorCode::Precondition, "arity must be positive");
  require(n <= xi.cutoff(), ErrorCode::Truncation, "arity exceeds the derivation's cutoff");
  SymMultiMap out(xi.space(), n, xi.parity());
  std::map<Monomial, SparseVector> acc;
  for (std::size_t k = 0; k < xi.space()->dim(); ++k) {
    for (const auto& [m, c] : xi.value(k).terms()) {
      if (static_cast<int>(m.size()) != n) continue;
      acc[m][k] = c * multiplicity_factor(m);
    }
  }
  for (const auto& [m, v] : acc) out.set(m, v);
  return out;
}

Derivation from_multilinear(const SymMultiMap& m, int cutoff) {
  require(m.arity() <= cutoff, ErrorCode::Truncation, "arity exceeds the requested cutoff");
  Derivation d(m.space(), m.parity(), cutoff);
  std::vector<TruncatedPolynomial> values = d.values();
  for (const auto& [inputs, out] : m.entries()) {
    Rational f = multiplicity_factor(inputs);
    for (const auto& [k, c] : out) values[k].add_term(inputs, c / f);
  }
  return Derivation(m.space(), m.parity(), std::move(values));
}

Rational evaluate_symmetric(const TruncatedPolynomial& f, const std::vector<std::uint32_t>& inputs) {
  auto n = normalize(*f.space(), inputs);
  if (n.sign == 0) return Rational();
  require(static_cast<int>(n.monomial.size()) <= f.cutoff(), ErrorCode::Truncation,
          "evaluation arity exceeds the cutoff");
  return f.coefficient(n.monomial) * multiplicity_factor(n.monomial) * Rational(n.sign);
}

Rational supertrace_of_slot(const Derivation& xi, const std::vector<std::uint32_t>& fixed) {
  const int n = static_cast<int>(fixed.size()) + 1;
  SymMultiMap m = to_multilinear(xi, n);
  Rational s;
  for (std::uint32_t a = 0; a < xi.space()->dim(); ++a) {
    std::vector<std::uint32_t> in = fixed;
    in.push_back(a);
    SparseVector v = m.value(in);
    auto it = v.find(a);
    if (it == v.end()) continue;
    s += xi.space()->parity(a) == Parity::Even ? it->second : -it->second;
  }
  return s;
}

}  // namespace linfty
