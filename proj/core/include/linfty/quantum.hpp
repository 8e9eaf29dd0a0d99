#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linfty/unimodular.hpp"

namespace linfty {

// S(h) = sum_g S_g h^g on generators with an odd nondegenerate Poisson structure.
// A monomial of word length n in S_g has weight 2g + n, which must exceed 2.
// S_g is kept through word length weight_cutoff - 2g.
class QuantumStructure {
 public:
  QuantumStructure(PoissonStructure poisson, Derivation d, std::vector<TruncatedPolynomial> genus, int weight_cutoff);
  QuantumStructure(PoissonStructure poisson, std::vector<TruncatedPolynomial> genus, int weight_cutoff);

  const PoissonStructure& poisson() const { return poisson_; }
  const SpacePtr& space() const { return poisson_.space(); }
  const Derivation& d() const { return d_; }
  const std::vector<TruncatedPolynomial>& genus() const { return genus_; }
  const TruncatedPolynomial& at(int g) const { return genus_.at(g); }
  int genus_cutoff() const { return static_cast<int>(genus_.size()) - 1; }
  int weight_cutoff() const { return weight_cutoff_; }

 private:
  PoissonStructure poisson_;
  Derivation d_;
  std::vector<TruncatedPolynomial> genus_;
  int weight_cutoff_;
};

struct QmeReport {
  bool ok = false;
  std::map<std::pair<int, int>, TruncatedPolynomial> residual;  // (genus, weight) -> component
};

// (d + h Delta) S + 1/2 {S, S}
QmeReport check_qme(const QuantumStructure& q);

// The genus-g part of the QME without the d S_g + {S_0, S_g} term.
TruncatedPolynomial qme_source(const QuantumStructure& q, int g);

struct QuantumLift {
  bool ok = false;
  std::optional<QuantumStructure> structure;     // through the last solved genus
  std::vector<std::size_t> solution_dims;        // per genus >= 1
  int obstructed_genus = -1;
  std::optional<TruncatedPolynomial> obstruction;  // the class that failed to be exact
  std::optional<TruncatedPolynomial> certificate;
  int obstructed_at = -1;                        // word length
  int reliable_weight = 0;
};

// Greedy order-by-order solution of the QME for S_1..S_G given S_0.
QuantumLift quantum_lift(const PoissonStructure& p, const TruncatedPolynomial& s0, int genus, int weight_cutoff);
QuantumLift quantum_lift(const PoissonStructure& p, const Derivation& d, const TruncatedPolynomial& s0, int genus,
                         int weight_cutoff);

// S with X_S = m and no constant term.
TruncatedPolynomial hamiltonian_of_structure(const Derivation& m, const PoissonStructure& p);
TruncatedPolynomial hamiltonian_of_structure(const Derivation& m, const CyclicData& c);

}  // namespace linfty
