#include "linfty/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "linfty/errors.hpp"

namespace linfty {

Parity monomial_parity(const GradedSpace& space, const Monomial& m) {
  int k = 0;
  for (auto i : m) k += bit(space.parity(i));
  return parity_of(k);
}

SignedMonomial normalize(const GradedSpace& space, std::vector<std::uint32_t> word) {
  int sign = 1;
  // insertion sort, counting transpositions of two odd letters
  for (std::size_t i = 1; i < word.size(); ++i) {
    for (std::size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
      if (space.parity(word[j]) == Parity::Odd && space.parity(word[j - 1]) == Parity::Odd) sign = -sign;
      std::swap(word[j - 1], word[j]);
    }
  }
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i] == word[i - 1] && space.parity(word[i]) == Parity::Odd) return {0, {}};
  return {sign, std::move(word)};
}

SignedMonomial multiply(const GradedSpace& space, const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  // Each odd letter of b moves left past the odd letters of a that are larger.
  int swaps = 0;
  std::size_t odd_left_in_a = 0;
  for (auto i : a) odd_left_in_a += space.parity(i) == Parity::Odd;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size() || (ia < a.size() && a[ia] <= b[ib])) {
      if (ib < b.size() && a[ia] == b[ib] && space.parity(a[ia]) == Parity::Odd) return {0, {}};
      if (space.parity(a[ia]) == Parity::Odd) --odd_left_in_a;
      out.push_back(a[ia++]);
    } else {
      if (space.parity(b[ib]) == Parity::Odd) swaps += static_cast<int>(odd_left_in_a);
      out.push_back(b[ib++]);
    }
  }
  return {(swaps & 1) ? -1 : 1, std::move(out)};
}

namespace {

void enumerate(const GradedSpace& space, std::uint32_t start, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t i = start; i < space.dim(); ++i) {
    cur.push_back(i);
    std::uint32_t next = space.parity(i) == Parity::Odd ? i + 1 : i;
    enumerate(space, next, remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_weight(const GradedSpace& space, int weight) {
  std::vector<Monomial> out;
  if (weight < 0) return out;
  Monomial cur;
  enumerate(space, 0, weight, cur, out);
  return out;
}

TruncatedPolynomial::TruncatedPolynomial(SpacePtr space, int cutoff) : space_(std::move(space)), cutoff_(cutoff) {
  require(space_ != nullptr, ErrorCode::Space, "polynomial without a space");
}

TruncatedPolynomial TruncatedPolynomial::constant(SpacePtr space, const Rational& c, int cutoff) {
  TruncatedPolynomial p(std::move(space), cutoff);
  p.add_term({}, c);
  return p;
}

TruncatedPolynomial TruncatedPolynomial::generator(SpacePtr space, std::size_t i, int cutoff) {
  require(i < space->dim(), ErrorCode::Shape, "generator index out of range");
  TruncatedPolynomial p(std::move(space), cutoff);
  p.add_term({static_cast<std::uint32_t>(i)}, Rational(1));
  return p;
}

TruncatedPolynomial TruncatedPolynomial::word(SpacePtr space, std::vector<std::uint32_t> w, const Rational& c,
                                              int cutoff) {
  for (auto i : w) require(i < space->dim(), ErrorCode::Shape, "generator index out of range");
  TruncatedPolynomial p(space, cutoff);
  auto n = normalize(*space, std::move(w));
  if (n.sign != 0) p.add_term(n.monomial, c * Rational(n.sign));
  return p;
}

int TruncatedPolynomial::min_weight() const {
  return terms_.empty() ? cutoff_ + 1 : static_cast<int>(terms_.begin()->first.size());
}

int TruncatedPolynomial::max_weight() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

Rational TruncatedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

std::optional<Parity> TruncatedPolynomial::parity() const {
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    Parity q = monomial_parity(*space_, m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p ? p : std::optional<Parity>(Parity::Even);
}

bool TruncatedPolynomial::has_parity(Parity p) const {
  for (const auto& [m, c] : terms_)
    if (monomial_parity(*space_, m) != p) return false;
  return true;
}

void TruncatedPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero() || static_cast<int>(m.size()) > cutoff_) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void require_same_space(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  require(a.space() == b.space() || *a.space() == *b.space(), ErrorCode::Space,
          "polynomials live on different spaces");
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& o) {
  require_same_space(*this, o);
  if (o.cutoff_ < cutoff_) *this = truncate(*this, o.cutoff_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& o) { return *this += -o; }

TruncatedPolynomial TruncatedPolynomial::operator-() const {
  TruncatedPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TruncatedPolynomial operator*(const Rational& s, const TruncatedPolynomial& p) {
  TruncatedPolynomial r(p.space(), p.cutoff());
  if (!s.is_zero())
    for (const auto& [m, c] : p.terms()) r.add_term(m, s * c);
  return r;
}

bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  require_same_space(a, b);
  int c = std::min(a.cutoff(), b.cutoff());
  return truncate(a, c).terms() == truncate(b, c).terms();
}

std::string TruncatedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    } else if (a.sign() < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    if (m.empty()) {
      os << a;
      continue;
    }
    if (a != Rational(1)) os << a << "*";
    for (std::size_t k = 0; k < m.size(); ++k) os << (k ? "*" : "") << space_->name(m[k]);
  }
  return os.str();
}

TruncatedPolynomial multiply_bounded(const TruncatedPolynomial& a, const TruncatedPolynomial& b, int cap) {
  require_same_space(a, b);
  long exact = std::min<long>(static_cast<long>(a.cutoff()) + b.min_weight(),
                              static_cast<long>(b.cutoff()) + a.min_weight());
  int cutoff = static_cast<int>(std::min<long>(exact, cap));
  TruncatedPolynomial r(a.space(), cutoff);
  for (const auto& [ma, ca] : a.terms()) {
    if (static_cast<int>(ma.size()) > cutoff) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (static_cast<int>(ma.size() + mb.size()) > cutoff) break;
      auto prod = multiply(*a.space(), ma, mb);
      if (prod.sign != 0) r.add_term(prod.monomial, ca * cb * Rational(prod.sign));
    }
  }
  return r;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  return multiply_bounded(a, b, std::min(a.cutoff(), b.cutoff()));
}

TruncatedPolynomial weight_component(const TruncatedPolynomial& p, int w) {
  require(w <= p.cutoff(), ErrorCode::Truncation,
          "weight " + std::to_string(w) + " exceeds cutoff " + std::to_string(p.cutoff()));
  TruncatedPolynomial r(p.space(), p.cutoff());
  for (const auto& [m, c] : p.terms())
    if (static_cast<int>(m.size()) == w) r.add_term(m, c);
  return r;
}

TruncatedPolynomial truncate(const TruncatedPolynomial& p, int cutoff) {
  TruncatedPolynomial r(p.space(), std::min(cutoff, p.cutoff()));
  for (const auto& [m, c] : p.terms()) r.add_term(m, c);
  return r;
}

TruncatedPolynomial parity_component(const TruncatedPolynomial& p, Parity parity) {
  TruncatedPolynomial r(p.space(), p.cutoff());
  for (const auto& [m, c] : p.terms())
    if (monomial_parity(*p.space(), m) == parity) r.add_term(m, c);
  return r;
}

TruncatedPolynomial partial(const TruncatedPolynomial& p, std::size_t i) {
  const GradedSpace& space = *p.space();
  require(i < space.dim(), ErrorCode::Shape, "generator index out of range");
  const bool odd = space.parity(i) == Parity::Odd;
  TruncatedPolynomial r(p.space(), p.cutoff() - 1);
  for (const auto& [m, c] : p.terms()) {
    auto first = std::find(m.begin(), m.end(), static_cast<std::uint32_t>(i));
    if (first == m.end()) continue;
    Rational coeff = c;
    if (odd) {
      int before = 0;
      for (auto it = m.begin(); it != first; ++it) before += space.parity(*it) == Parity::Odd;
      if (before & 1) coeff = -coeff;
    } else {
      coeff *= Rational(static_cast<long>(std::count(m.begin(), m.end(), static_cast<std::uint32_t>(i))));
    }
    Monomial rest = m;
    rest.erase(rest.begin() + (first - m.begin()));
    r.add_term(rest, coeff);
  }
  return r;
}

}  // namespace linfty
