#pragma once

#include <map>
#include <vector>

#include "linfty/graded_space.hpp"
#include "linfty/rational.hpp"

namespace linfty::verify {

// Free associative algebra on even letters modulo words longer than the
// degree, as a dgla with the commutator bracket and zero differential.  Its
// Lie elements form the free nilpotent Lie algebra of that class.
class FreeNilpotent {
 public:
  using Word = std::vector<int>;
  using Element = std::map<Word, Rational>;

  FreeNilpotent(int letters, int degree) : letters_(letters), degree_(degree) {}

  int degree() const { return degree_; }
  Element zero() const { return {}; }
  Element one() const { return {{Word{}, Rational(1)}}; }
  Element letter(int a) const { return {{Word{a}, Rational(1)}}; }

  Element add(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [w, c] : b) accumulate(out, w, c);
    return out;
  }
  Element scale(const Rational& s, const Element& a) const {
    Element out;
    for (const auto& [w, c] : a) accumulate(out, w, s * c);
    return out;
  }
  Element mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [u, x] : a)
      for (const auto& [v, y] : b) {
        if (static_cast<int>(u.size() + v.size()) > degree_) continue;
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        accumulate(out, w, x * y);
      }
    return out;
  }
  Element bracket(const Element& a, const Element& b) const { return add(mul(a, b), scale(Rational(-1), mul(b, a))); }
  Element d(const Element&) const { return {}; }
  bool is_zero(const Element& a) const { return a.empty(); }
  bool has_parity(const Element&, Parity p) const { return p == Parity::Even; }

  // Power series on elements without constant term.
  Element exp(const Element& x) const {
    Element out = one(), term = one();
    for (int k = 1; k <= degree_; ++k) {
      term = scale(Rational(1, k), mul(term, x));
      out = add(out, term);
    }
    return out;
  }
  // log(u) for u with constant term 1.
  Element log(const Element& u) const {
    Element z = add(u, scale(Rational(-1), one()));
    Element out, power = one();
    for (int k = 1; k <= degree_; ++k) {
      power = mul(power, z);
      out = add(out, scale(Rational(k % 2 ? 1 : -1, k), power));
    }
    return out;
  }

 private:
  static void accumulate(Element& e, const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = e.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) e.erase(it);
    }
  }

  int letters_;
  int degree_;
};

}  // namespace linfty::verify
