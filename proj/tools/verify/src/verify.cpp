#include "linfty_verify/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <map>
#include <sstream>

#include "linfty/errors.hpp"
#include "linfty/gauge.hpp"
#include "linfty/poisson.hpp"
#include "linfty/quantum.hpp"
#include "linfty/random.hpp"
#include "linfty/sdr.hpp"
#include "linfty/tensor.hpp"
#include "linfty/unimodular.hpp"
#include "linfty_verify/free_nilpotent.hpp"

namespace linfty::verify {

namespace {

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string count(int n, const std::string& what) { return std::to_string(n) + " " + what; }

Parity coin_parity(Sampler& rng) { return parity_of(rng.uniform(0, 1)); }

struct OddDouble {
  LInftyStructure base;
  DoubleSpace dbl;
  TruncatedPolynomial s0;
};

OddDouble odd_double(const LieAlgebra& g, int cutoff) {
  auto s = from_lie(g, cutoff);
  auto dbl = make_double(s.space(), DoubleKind::Odd);
  return {s, dbl, double_odd(dbl, s.m())};
}

Rational pair(const TruncatedPolynomial& functional, const TruncatedPolynomial& f) {
  Rational t;
  for (const auto& [m, c] : functional.terms()) t += c * f.coefficient(m);
  return t;
}

Outcome divergence_of_commutator(std::uint64_t seed) {
  Sampler rng(seed);
  const int N = 6;
  for (int trial = 0; trial < 100; ++trial) {
    auto sp = make_space(rng.space(2, 2).basis());
    Parity pa = coin_parity(rng), pb = coin_parity(rng);
    auto a = rng.derivation(sp, pa, 1, 4, N, 0.4);
    auto b = rng.derivation(sp, pb, 1, 4, N, 0.4);
    auto lhs = divergence(bracket(a, b));
    auto rhs = eval(a, divergence(b)) - sign_power(koszul(pa, pb)) * eval(b, divergence(a));
    if (!(lhs - rhs).is_zero()) return fail("nonzero residual at pair " + std::to_string(trial));
  }
  return pass(count(100, "pairs, residual 0"));
}

Outcome doubling(std::uint64_t seed) {
  Sampler rng(seed);
  const int N = 6;
  for (int trial = 0; trial < 50; ++trial) {
    auto base = make_space(rng.space(2, 2).basis());
    Parity pa = coin_parity(rng), pb = coin_parity(rng);
    auto xi = rng.derivation(base, pa, 1, 3, N, 0.3);
    auto eta = rng.derivation(base, pb, 1, 3, N, 0.3);
    auto br = bracket(xi, eta);
    auto ev = make_double(base, DoubleKind::Even);
    if (!(double_even(ev, br) == poisson_bracket(ev.poisson, double_even(ev, xi), double_even(ev, eta))))
      return fail("even double does not preserve the bracket at pair " + std::to_string(trial));
  }
  for (int trial = 0; trial < 50; ++trial) {
    auto base = make_space(rng.space(2, 2).basis());
    Parity pa = coin_parity(rng), pb = coin_parity(rng);
    auto xi = rng.derivation(base, pa, 1, 3, N, 0.3);
    auto eta = rng.derivation(base, pb, 1, 3, N, 0.3);
    auto od = make_double(base, DoubleKind::Odd);
    if (!(poisson_bracket(od.poisson, double_odd(od, xi), double_odd(od, eta)) ==
          sign_power(bit(pa)) * double_odd(od, bracket(xi, eta))))
      return fail("odd double identity fails at pair " + std::to_string(trial));
  }
  return pass(count(50, "even and 50 odd pairs"));
}

Outcome divergence_laplacian(std::uint64_t seed) {
  Sampler rng(seed);
  const int N = 6;
  for (int trial = 0; trial < 50; ++trial) {
    auto base = make_space(rng.space(2, 2).basis());
    auto xi = rng.derivation(base, coin_parity(rng), 1, 4, N, 0.3);
    auto od = make_double(base, DoubleKind::Odd);
    if (!(laplacian(od.poisson, double_odd(od, xi)) == od.lift(divergence(xi))))
      return fail("Laplacian of the odd double differs from the divergence at sample " + std::to_string(trial));
    auto ev = make_double(base, DoubleKind::Even);
    if (!divergence(hamiltonian_field(ev.poisson, double_even(ev, xi))).is_zero())
      return fail("even Hamiltonian field has nonzero divergence at sample " + std::to_string(trial));
  }
  return pass(count(50, "fields"));
}

Outcome semidirect_square(std::uint64_t seed) {
  Sampler rng(seed);
  const int N = 5;
  for (int trial = 0; trial < 50; ++trial) {
    auto s = make_space(rng.space(2, 2, 2).basis());
    auto lin = rng.square_zero(*s);
    if (!supertrace(lin).is_zero()) return fail("sampled differential is not traceless");
    auto d = Derivation::linear(s, lin, N);
    Parity p = coin_parity(rng);
    SemidirectElement a(rng.derivation(s, p, 2, 3, N, 0.3), rng.polynomial(s, flip(p), 1, 3, N, 0.3));
    if (!total_differential(d, total_differential(d, a)).is_zero())
      return fail("(d + d_e)^2 is nonzero at sample " + std::to_string(trial));
  }
  return pass(count(50, "elements"));
}

Outcome unimodular_fixtures(std::uint64_t) {
  std::vector<std::pair<std::string, LieAlgebra>> fixtures{{"abelian", lie::abelian(2)},
                                                           {"Heisenberg", lie::heisenberg()},
                                                           {"[x,y]=y", lie::affine_line()},
                                                           {"sl2", lie::sl2()}};
  std::map<std::string, bool> verdict;
  for (const auto& [name, g] : fixtures) {
    auto ob = obstruction_class(from_lie(g, 4));
    if (ob.vanishes != lie_unimodular(g)) return fail("trace criterion and obstruction class disagree on " + name);
    verdict[name] = ob.vanishes;
    if (!ob.vanishes && ob.obstructed_at != 1) return fail(name + " is not obstructed in weight 1");
  }
  if (verdict["[x,y]=y"]) return fail("[x,y]=y is not obstructed");
  if (!verdict["Heisenberg"]) return fail("Heisenberg is obstructed");
  return pass("4 fixtures agree; only [x,y]=y is obstructed");
}

Outcome odd_behaviour(std::uint64_t) {
  auto two = classify_dimension(GradedSpace({{"y1", Parity::Even}, {"y2", Parity::Even}}), 4);
  if (two.missed != std::vector<Monomial>{{0, 1}} || two.cokernel_dim != 1)
    return fail("for 0|2 the image should miss exactly y1 y2");
  auto mixed = classify_dimension(GradedSpace({{"a", Parity::Even}, {"b", Parity::Odd}}), 4);
  if (!mixed.missed.empty() || mixed.cokernel_dim != 0) return fail("for 1|1 the divergence is not surjective");
  return pass("0|2 misses only y1 y2; 1|1 is surjective through weight 4");
}

Outcome tensor_grid(std::uint64_t) {
  const int N = 5;
  std::vector<std::pair<std::string, Cdga>> algebras{
      {"k", frobenius::point()}, {"H(S1)", frobenius::circle()}, {"H(S2)", frobenius::sphere2()}};
  std::vector<std::pair<std::string, LieAlgebra>> lies{
      {"abelian", lie::abelian(2)}, {"Heisenberg", lie::heisenberg()}, {"[x,y]=y", lie::affine_line()}};
  for (const auto& [an, a] : algebras)
    for (const auto& [gn, g] : lies) {
      auto s = from_lie(g, N);
      auto t = tensor_linfty(a, s);
      bool strict = divergence(t.m()).is_zero();
      bool lift = obstruction_class(t).vanishes;
      bool unimodular_a = cdga_unimodular(a);
      if (strict != (unimodular_a || divergence(s.m()).is_zero()))
        return fail("strict unimodularity verdict wrong for " + an + " x " + gn);
      if (lift != (unimodular_a || obstruction_class(s).vanishes))
        return fail("lift verdict wrong for " + an + " x " + gn);
    }
  return pass("9 cells match");
}

Outcome quantum_lifts(std::uint64_t) {
  auto h = odd_double(lie::heisenberg(), 7);
  auto lift = quantum_lift(h.dbl.poisson, h.s0, 2, 6);
  if (!lift.ok || lift.structure->genus_cutoff() != 2) return fail("Heisenberg does not lift to genus 2");
  if (!check_qme(*lift.structure).ok) return fail("returned S(h) fails the quantum master equation");
  auto a = odd_double(lie::affine_line(), 7);
  auto bad = quantum_lift(a.dbl.poisson, a.s0, 2, 6);
  if (bad.ok || bad.obstructed_genus != 1) return fail("[x,y]=y is not obstructed at genus 1");
  if (!bad.certificate || !bad.obstruction || pair(*bad.certificate, *bad.obstruction).is_zero())
    return fail("no certificate for the genus 1 class");
  return pass("Heisenberg lifts to genus 2; [x,y]=y obstructed at genus 1 with certificate");
}

Outcome quantum_consistency(std::uint64_t) {
  int fixtures = 0;
  for (const auto& [g, genus] : std::vector<std::pair<LieAlgebra, int>>{
           {lie::heisenberg(), 2}, {lie::heisenberg(), 1}, {lie::sl2(), 1}, {lie::abelian(2), 1}}) {
    auto d = odd_double(g, 7);
    auto lift = quantum_lift(d.dbl.poisson, d.s0, genus, 6);
    if (!lift.ok) return fail("fixture " + std::to_string(fixtures) + " was not accepted");
    const auto& q = *lift.structure;
    auto x = hamiltonian_field(q.poisson(), q.at(0));
    LInftyStructure classical(q.space(), truncate(q.d(), x.cutoff()), x);
    if (!check_mc(classical).ok) return fail("genus 0 of fixture " + std::to_string(fixtures) + " is not MC");
    if (!check_unimodular({classical, q.at(1)}).ok)
      return fail("(X_S0, S1) of fixture " + std::to_string(fixtures) + " is not unimodular");
    ++fixtures;
  }
  return pass(count(fixtures, "fixtures"));
}

// Doubles of [x,y]=y.  A quantum lift of the tensor product needs an odd
// pairing, so odd-dimensional models are paired with the even double.
std::pair<LInftyStructure, CyclicData> affine_double(DoubleKind kind, int cutoff) {
  auto aff = from_lie(lie::affine_line(), cutoff);
  auto d = make_double(aff.space(), kind);
  auto h = kind == DoubleKind::Odd ? double_odd(d, aff.m()) : double_even(d, aff.m());
  auto x = hamiltonian_field(d.poisson, h);
  return {LInftyStructure(d.space(), Derivation(d.space(), Parity::Odd, x.cutoff()), x), cyclic_from_poisson(d.poisson)};
}

Outcome frobenius_models(std::uint64_t) {
  const int N = 5;
  auto [dod, cod] = affine_double(DoubleKind::Odd, N);
  auto [dev, cev] = affine_double(DoubleKind::Even, N);

  if (obstruction_class(tensor_linfty(frobenius::sphere2(), dod)).vanishes)
    return fail("tensor with H(S2) is not obstructed");
  for (const auto& [name, a] : std::vector<std::pair<std::string, Cdga>>{{"H(S1)", frobenius::circle()},
                                                                        {"H(S3)", frobenius::sphere3()}}) {
    if (!divergence(tensor_linfty(a, dod).m()).is_zero())
      return fail("odd double tensor " + name + " is not strictly unimodular");
    auto t = tensor_linfty(a, dev);
    if (!divergence(t.m()).is_zero()) return fail("even double tensor " + name + " is not strictly unimodular");
    auto c = tensor_pairing(a, cev);
    if (c.parity() != Parity::Odd) return fail("even double tensor " + name + " is not odd cyclic");
    auto lift = quantum_lift(c.poisson(t.space()), hamiltonian_of_structure(t.m(), c), 1, 4);
    if (!lift.ok || !check_qme(*lift.structure).ok) return fail("tensor with " + name + " has no genus 1 lift");
  }
  return pass("H(S2) obstructed; H(S1), H(S3) strictly unimodular with genus 1 lifts");
}

Outcome appendix_gauge(std::uint64_t seed) {
  // BCH against log(e^X e^Y) in the truncated tensor algebra
  Sampler rng(seed);
  FreeNilpotent f(3, 4);
  for (int trial = 0; trial < 20; ++trial) {
    auto random_element = [&] {
      auto e = f.zero();
      for (int a = 0; a < 3; ++a)
        if (rng.coin(0.7)) e = f.add(e, f.scale(rng.rational(), f.letter(a)));
      auto u = f.letter(rng.uniform(0, 2)), v = f.letter(rng.uniform(0, 2));
      return f.add(e, f.scale(rng.rational(), f.bracket(u, v)));
    };
    auto x = random_element(), y = random_element();
    if (!elements_equal(f, bch(f, x, y), f.log(f.mul(f.exp(x), f.exp(y)))))
      return fail("BCH differs from the tensor algebra oracle at sample " + std::to_string(trial));
  }
  {
    auto x = f.letter(0), y = f.letter(1);
    auto br = [&](const auto& a, const auto& b) { return f.bracket(a, b); };
    auto closed = f.add(f.add(x, y), f.scale(Rational(1, 2), br(x, y)));
    closed = f.add(closed, f.scale(Rational(1, 12), f.add(br(x, br(x, y)), br(y, br(y, x)))));
    closed = f.add(closed, f.scale(Rational(-1, 24), br(y, br(x, br(x, y)))));
    if (!elements_equal(f, bch(f, x, y), closed)) return fail("BCH of two letters differs from the degree 4 formula");
  }

  const int N = 6;
  int moved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SpacePtr s;
    std::optional<DerivationDgla> dgla;
    Derivation xi(make_space({}), Parity::Odd, N);
    if (trial % 2) {
      // odd generators alone leave no room for even parameters of weight >= 2
      auto h = odd_double(lie::heisenberg(), N + 1);
      s = h.dbl.space();
      dgla.emplace(s, N);
      xi = truncate(hamiltonian_field(h.dbl.poisson, h.s0), N);
    } else {
      s = make_space(rng.space(2, 2, 2).basis());
      dgla.emplace(s, Derivation::linear(s, rng.square_zero(*s), N));
      xi = gauge_apply(*dgla, rng.derivation(s, Parity::Even, 2, 3, N, 0.3), Derivation(s, Parity::Odd, N));
    }
    const auto& g = *dgla;
    auto y = rng.derivation(s, Parity::Even, 2, 4, N, 0.6);
    auto out = gauge_apply(g, y, xi);
    if (!g.is_zero(mc_residual(g, out))) return fail("gauge action broke MC at sample " + std::to_string(trial));
    moved += !elements_equal(g, out, xi);

    // boundaries of the twisted differential are cycles, hence stabilise
    auto tw = twist(g, xi);
    auto cycle = tw.d(rng.derivation(s, Parity::Odd, 2, 3, N, 0.3));
    if (!stabilizes(g, cycle, xi) || !elements_equal(g, gauge_apply(g, cycle, xi), xi))
      return fail("a twisted cycle does not stabilise at sample " + std::to_string(trial));
    if (stabilizes(g, y, xi) != elements_equal(g, out, xi))
      return fail("stabiliser test disagrees with the action at sample " + std::to_string(trial));
  }
  return pass("BCH matches on 21 samples; 100 gauge samples (" + std::to_string(moved) +
              " moved) and stabilising cycles");
}

Outcome appendix_sdr(std::uint64_t seed) {
  Sampler rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    int evens = rng.uniform(1, 3);
    std::vector<Generator> basis;
    for (int k = 0; k < 4; ++k) basis.push_back({"e" + std::to_string(k), k < evens ? Parity::Even : Parity::Odd});
    auto sdr = sample_retraction(rng, GradedSpace(basis));
    auto r = sdr_check(sdr);
    if (!r.holds(1) || !r.holds(2) || !r.holds(3)) return fail("sample " + std::to_string(trial) + " breaks (1)-(3)");
    auto fixed = sdr_check(sdr_repair(sdr));
    for (int k = 1; k <= 5; ++k)
      if (!fixed.holds(k)) return fail("repaired sample " + std::to_string(trial) + " fails (" + std::to_string(k) + ")");
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto sdr = sample_retraction_with_forms(rng);
    auto fixed = sdr_check(sdr_repair(sdr));
    for (int k = 1; k <= 8; ++k)
      if (!fixed.holds(k))
        return fail("repaired sample with forms " + std::to_string(trial) + " fails (" + std::to_string(k) + ")");
  }
  return pass("20 retractions repaired to (1)-(5), 20 with forms to (1)-(8)");
}

Outcome multilinear_convention(std::uint64_t) {
  auto s = make_space({{"t", Parity::Even}});
  for (int n = 2; n <= 4; ++n) {
    Derivation d(s, Parity::Even, 6);
    d.set_value(0, TruncatedPolynomial::word(s, std::vector<std::uint32_t>(n, 0), Rational(1), 6));
    auto m = to_multilinear(d, n);
    auto v = m.value(std::vector<std::uint32_t>(n, 0));
    if (v.size() != 1 || v.begin()->first != 0 || v.begin()->second != factorial(n))
      return fail("t^" + std::to_string(n) + " d/dt is not multiplication by " + factorial(n).str());
  }
  return pass("n! for n = 2, 3, 4");
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "divergence of a commutator", divergence_of_commutator},
      {2, "doubling maps", doubling},
      {3, "divergence as a Laplacian", divergence_laplacian},
      {4, "semidirect differential squares to zero", semidirect_square},
      {5, "unimodularity fixtures", unimodular_fixtures},
      {6, "divergence image in the purely odd case", odd_behaviour},
      {7, "tensor product grid", tensor_grid},
      {8, "quantum lifts of odd doubles", quantum_lifts},
      {9, "low genus of quantum structures", quantum_consistency},
      {10, "Frobenius model consequences", frobenius_models},
      {11, "BCH, gauge action and stabilisers", appendix_gauge},
      {12, "retraction repair", appendix_sdr},
      {13, "multilinear convention", multilinear_convention},
  };
  return all;
}

std::vector<Result> run_criteria(std::uint64_t seed, const std::vector<int>& only) {
  std::vector<Result> out;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(seed + static_cast<std::uint64_t>(c.id));
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::chrono::duration<double> t = std::chrono::steady_clock::now() - start;
    out.push_back({c.id, c.title, o.passed, o.detail, t.count()});
  }
  return out;
}

}  // namespace linfty::verify
