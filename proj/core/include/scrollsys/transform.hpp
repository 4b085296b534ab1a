#pragma once

// Elementary transformations F_n -> F_{n-k} acting on systems and classes.
// The class-level map is an isometry of the blow-up lattice, so virtual
// dimension and the (-1)-curve conditions are preserved exactly.

#include "scrollsys/curves.hpp"
#include "scrollsys/lattice.hpp"

namespace scrollsys {

struct TransformResult {
  SystemSpec spec;          // clamped multiplicities (never negative)
  BlowupClass class_image;  // the signed lattice image
  Int moved_points = 0;
  // |b - m| fiber components recorded when b - m < 0 at a transformed point:
  // a negative assigned multiplicity has no interpolation meaning.
  Int excess_fibers = 0;
  // The transformed points land on a distinguished section, so they are not
  // in general position; oracle verification must not treat them as generic.
  bool points_on_section = false;
};

// Signed class-level map at one point: L_n(...,m_i,...) with marked point
// index -> L_{n-1}(a - m + b, b, ..., b - m, ...).
BlowupClass transform_class_at(const BlowupClass& c, std::size_t point);

// One elementary transformation of a system at a marked point; n >= 1.
TransformResult elementary_transform_point(const SystemSpec& s, std::size_t point);

// k transformations of a homogeneous system:
// L_n(a,b,m^r) -> L_{n-k}(a + k(b-m), b, m^{r-k}, (b-m)^k), 1 <= k <= min(n,r).
TransformResult elementary_transform(const SystemSpec& s, Int k);

// Applies the class map at the curve's first k points and checks that
// E^2 = E.K = -1 is preserved.
bool transform_preserves_minus_one(const MinusOneCurveClass& c, Int k);

}  // namespace scrollsys
