#pragma once

#include <array>
#include <optional>
#include <string>

#include "linfty/linear_map.hpp"
#include "linfty/random.hpp"

namespace linfty {

// Strong deformation retraction from a complex V onto a complex B: even maps
// i: B -> V and p: V -> B and an odd homotopy s on V, optionally with forms.
struct SdrData {
  Complex big;
  Complex small;
  LinearMap i, p, s;
  std::optional<BilinearForm> big_form, small_form;
};

// Conditions in order:
//   1  d i = i d and d p = p d
//   2  p i = id
//   3  d s + s d = id - i p
//   4  s i = 0 and p s = 0
//   5  s^2 = 0
//   6  <ix, iy> = <x, y>
//   7  ker p is orthogonal to im i
//   8  <sx, y> = (-1)^{|x|} <x, sy>
// The last three are only evaluated when both forms are present.
struct SdrReport {
  std::array<std::optional<bool>, 8> conditions;
  bool holds(int k) const { return conditions.at(k - 1).value_or(false); }
  bool ok() const;
  static const char* describe(int k);
};

SdrReport sdr_check(const SdrData& s);

// Replaces s by (ds + sd) s (ds + sd) if condition 4 fails, then by s d s if
// condition 5 fails.  Needs conditions 1-3, and 6-8 when forms are present.
SdrData sdr_repair(const SdrData& s);

// Random data satisfying conditions 1-3 but usually not the side conditions:
// a retraction onto homology conjugated by a random automorphism, with s
// shifted by dt - td.
SdrData sample_retraction(Sampler& rng, const GradedSpace& v);
// As above on at most four dimensions, with odd forms satisfying 6-8; t is
// drawn so that dt - td keeps condition 8.
SdrData sample_retraction_with_forms(Sampler& rng);

}  // namespace linfty
