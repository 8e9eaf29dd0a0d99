#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linfty/derivation.hpp"
#include "linfty/poisson.hpp"

namespace linfty {

// Finite-dimensional graded Lie algebra by structure constants.
class LieAlgebra {
 public:
  using Brackets = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  // [b,a] is completed as -(-1)^{|a||b|}[a,b].
  LieAlgebra(GradedSpace space, const Brackets& brackets);

  const GradedSpace& space() const { return space_; }
  const Brackets& brackets() const { return brackets_; }
  SparseVector bracket(std::size_t a, std::size_t b) const;
  LinearMap ad(std::size_t a) const;

 private:
  GradedSpace space_;
  Brackets brackets_;
};

namespace lie {
LieAlgebra abelian(int n);
LieAlgebra heisenberg();     // [x,y] = z
LieAlgebra affine_line();    // [x,y] = y, not unimodular
LieAlgebra sl2();            // [h,e] = 2e, [h,f] = -2f, [e,f] = h
}  // namespace lie

// L-infinity structure on V, encoded on the generators of the shifted dual PiV*:
// a linear odd differential d and an odd m with values of weight >= 2.
class LInftyStructure {
 public:
  LInftyStructure(SpacePtr space, Derivation d, Derivation m);

  const SpacePtr& space() const { return space_; }
  const Derivation& d() const { return d_; }
  const Derivation& m() const { return m_; }
  Derivation total() const { return d_ + m_; }
  int cutoff() const { return m_.cutoff(); }
  int top_arity() const;

 private:
  SpacePtr space_;
  Derivation d_, m_;
};

// Generators named after the basis of V with a prime; m~_2(Pia,Pib) = -(-1)^{|a|} Pi[a,b].
LInftyStructure from_lie(const LieAlgebra& g, int cutoff);
// Brackets m~_n on PiV given as symmetric maps; arity 1 is the differential.
LInftyStructure from_brackets(SpacePtr space, const std::vector<SymMultiMap>& brackets, int cutoff);
// Generator space PiV* for V, with primed names.
SpacePtr shifted_dual(const GradedSpace& v);

struct McReport {
  bool ok = false;
  int cutoff = 0;
  std::map<int, Derivation> residual;  // nonzero weight components of d(m) + [m,m]/2
};

McReport check_mc(const LInftyStructure& s);

// Graded-symmetric pairing on V.  Its matrix inverse is the constant Poisson
// structure on the generators of PiV*.
class CyclicData {
 public:
  explicit CyclicData(BilinearForm form);

  const BilinearForm& form() const { return form_; }
  Parity parity() const { return form_.parity(); }
  PoissonStructure poisson(SpacePtr generators) const;

 private:
  BilinearForm form_;
};

CyclicData cyclic_from_poisson(const PoissonStructure& p);

struct CyclicReport {
  bool ok = false;
  int failing_arity = 0;
  std::vector<std::uint32_t> witness;  // inputs at which symmetry fails
};

// Checks that <m~_n(u_1..u_n), u_{n+1}> is graded symmetric in all n+1 slots.
CyclicReport check_cyclic(const Derivation& xi, const CyclicData& c);
CyclicReport check_cyclic(const LInftyStructure& s, const CyclicData& c);
// Independent test: xi preserves the Poisson structure dual to the pairing.
bool preserves_poisson(const Derivation& xi, const PoissonStructure& p);

// Chevalley-Eilenberg complex of the structure on monomials of weights
// [min_weight, cutoff], as the quotient by weights above the cutoff.
struct CeComplex {
  SpacePtr space;
  int min_weight = 0;
  int cutoff = 0;
  int reliable_weight = 0;  // cutoff - top arity + 1
  std::optional<int> weight_shift;  // set when d + m raises weight by a fixed amount
  std::vector<Monomial> basis;
  std::map<Monomial, std::size_t, MonomialLess> index;
  SparseMatrix q{0, 0};  // (d + m) on the basis

  SparseVector vector(const TruncatedPolynomial& f) const;
  TruncatedPolynomial polynomial(const SparseVector& v) const;
};

CeComplex ce_assemble(const LInftyStructure& s, int min_weight = 0);
CeComplex ce_assemble(const Derivation& q, int min_weight = 0);

struct CeSolution {
  bool solvable = false;
  std::optional<TruncatedPolynomial> solution;  // greedy: free variables zero
  std::optional<TruncatedPolynomial> certificate;  // functional killing the image but not c
  int obstructed_at = -1;                          // lowest truncation weight that is already inconsistent
  std::size_t kernel_dim = 0;                      // dimension of the affine space of solutions
};

// Solves (d + m) h = c with h of weight >= min_weight, through the smaller of the
// two cutoffs.  c must be closed.
CeSolution ce_solve(const CeComplex& ce, const TruncatedPolynomial& c, int min_weight);

struct CeCohomology {
  std::size_t even = 0, odd = 0;
  std::map<int, std::pair<std::size_t, std::size_t>> by_weight;  // only when q is weight homogeneous
};

CeCohomology ce_cohomology(const CeComplex& ce);

}  // namespace linfty
