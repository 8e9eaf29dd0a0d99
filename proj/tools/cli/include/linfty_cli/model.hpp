#pragma once

#include <optional>
#include <string>

#include "linfty/linfty.hpp"
#include "linfty/sdr.hpp"
#include "linfty/tensor.hpp"
#include "linfty_cli/document.hpp"

namespace linfty::cli {

// A document read as library objects.  The L-infinity structure lives on the
// generator space PiV* of V, whose names carry a trailing prime.
struct Model {
  GradedSpace v;
  LInftyStructure structure;
  std::optional<LieAlgebra> lie;
  std::optional<LinearMap> differential;  // on V
  std::optional<CyclicData> cyclic;
};

Model build_model(const AlgebraDocument& doc, int cutoff);
Cdga build_cdga(const CdgaBlock& block);
// Needs a retraction block; the big complex is (V, differential).
SdrData build_sdr(const AlgebraDocument& doc);

// The structure as an L-infinity document: brackets of arity <= cutoff, the
// linear part as the differential, the cyclic form as the pairing.
AlgebraDocument structure_document(const LInftyStructure& s, const std::optional<CyclicData>& cyclic,
                                   std::optional<std::string> name = std::nullopt);
// Replaces the homotopy of the retraction block.
AlgebraDocument with_homotopy(AlgebraDocument doc, const LinearMap& s);

}  // namespace linfty::cli
