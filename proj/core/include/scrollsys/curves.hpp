#pragma once

// Enumeration and recognition of (-1)-curve classes: the lattice test, the
// conic parametrization for homogeneous multiplicities m >= 2, the
// multiplicity-1 catalogue and the candidate supply for the reduction
// procedure.

#include <optional>

#include "scrollsys/lattice.hpp"

namespace scrollsys {

// Witness for a homogeneous (-1)-class found through the rational
// parametrization b = rt + 1, t = p/q of the conic
// 2b^2 - rmb - b + rm^2 - 1 = 0.
struct ConicParam {
  Int p = 0;
  Int q = 1;  // q > 0, gcd(|p|, q) = 1, q | m(m-1)
  Int b = 0;
  Int r = 0;
};

struct MinusOneCurveClass {
  BlowupClass cls;
  std::optional<ConicParam> witness;
};

// True iff E^2 = -1 and E.K = -1.  Irreducibility is assumed under the
// generality convention; the oracle provides the independent check where a
// conclusion depends on it.
bool is_minus_one_class(const BlowupClass& c);

// A homogeneous curve shape L_n(a,b,m^r) before placement on points.
struct HomogeneousFamily {
  Int a = 0;
  Int b = 0;
  Int m = 0;
  Int r = 0;
  std::optional<ConicParam> witness;

  friend bool operator==(const HomogeneousFamily&, const HomogeneousFamily&);
};

// All homogeneous solutions L_n(a,b,m^r) of the (-1)-curve system with
// m >= 2, 0 <= b <= b_max, a >= 0, r >= 0, found by sweeping divisors q of
// m(m-1) and p coprime to q.  Duplicate-free, sorted by (b, a, r).
std::vector<MinusOneCurveClass> enumerate_homogeneous(Int n, Int m, Int b_max);

// The multiplicity-1 catalogue: L_n(1,0,1), L_n(e,1,1^{2e+n+1}) for
// 0 <= e <= e_max, and L_1(0,2,1^5) when n = 1.
std::vector<MinusOneCurveClass> mult_one_catalogue(Int n, Int e_max);

// Curve shapes that can meet a class on F_n with r points negatively,
// bounded by b <= b_max, m <= m_max, r <= r_max.  On F_0 the (a,b)-swapped
// shapes are included as well.
std::vector<HomogeneousFamily> curve_families(Int n, Int b_max, Int m_max, Int r_max);

struct CandidateConfig {
  // Default caps: b_cap = s.b (max(s.a, s.b) on F_0), m_cap = max mult of s.
  // A curve above either cap cannot meet s negatively while remaining
  // effective in the supported range; the caps are recorded with results so
  // a scan can widen them.
  std::optional<Int> b_cap;
  std::optional<Int> m_cap;
  std::size_t placement_limit = 2'000'000;
};

// Every point-placement of the candidate families onto subsets of s's
// points.  Classes are aligned with s's point slots; duplicate placements
// (as per-point vectors) are removed.
std::vector<MinusOneCurveClass> candidate_curves(const SystemSpec& s,
                                                 const CandidateConfig& cfg = {});

}  // namespace scrollsys
