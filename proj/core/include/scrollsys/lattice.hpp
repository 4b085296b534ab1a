#pragma once

// Integer arithmetic of the Picard lattice of the rational scroll F_n and its
// blow-ups: intersection form, canonical class, virtual/expected dimensions
// and the nef-range section count.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scrollsys {

using Int = std::int64_t;

// All lattice arithmetic is exact and fails loudly on 64-bit overflow.
struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw overflow_error("integer overflow in add");
  return r;
}
inline Int checked_sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) throw overflow_error("integer overflow in sub");
  return r;
}
inline Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw overflow_error("integer overflow in mul");
  return r;
}

// Divisor class a*F + b*H on F_n.  F^2 = 0, H^2 = n, F.H = 1.
struct DivisorClass {
  Int n = 0;
  Int a = 0;
  Int b = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

// A divisor class on the blow-up of F_n at r generic points: the base class
// minus mults[i] times the i-th exceptional divisor.  Entries may be negative
// transiently during reduction.
struct BlowupClass {
  DivisorClass base;
  std::vector<Int> mults;

  Int n() const { return base.n; }
  Int a() const { return base.a; }
  Int b() const { return base.b; }
  Int r() const { return static_cast<Int>(mults.size()); }

  // Canonical form: multiplicities sorted descending.
  BlowupClass canonical() const;

  // Equality is canonical: same n, a, b and same multiset of multiplicities.
  friend bool operator==(const BlowupClass& x, const BlowupClass& y);
};

BlowupClass make_class(Int n, Int a, Int b, std::vector<Int> mults = {});

// A linear system L_n(a,b,m_1,...,m_r): base class with a,b >= 0 and
// non-negative multiplicities at generic points, none on Gamma_n.
struct SystemSpec {
  BlowupClass cls;

  Int n() const { return cls.n(); }
  Int a() const { return cls.a(); }
  Int b() const { return cls.b(); }
  Int r() const { return cls.r(); }
  const std::vector<Int>& mults() const { return cls.mults; }

  friend bool operator==(const SystemSpec& x, const SystemSpec& y) { return x.cls == y.cls; }
};

// Validates n >= 0 and all multiplicities >= 0.
SystemSpec make_system(Int n, Int a, Int b, std::vector<Int> mults = {});
SystemSpec make_system(BlowupClass c);

// Homogeneous system L_n(a,b,m^r).
SystemSpec make_homogeneous(Int n, Int a, Int b, Int m, Int r);

struct DimensionTriple {
  Int v = 0;                  // virtual dimension
  Int e = -1;                 // expected dimension = max(v,-1)
  std::optional<Int> l;       // effective dimension when known
};

// Intersection number of two blow-up classes on the same F_n.  Shorter
// multiplicity lists are padded with zeros (the points are the same generic
// points).
Int intersect(const BlowupClass& c1, const BlowupClass& c2);

// Canonical class of the blow-up of F_n at r points, encoded so that
// intersect(L, canonical_class) carries the standard K contribution:
// (n-2)F - 2H with every multiplicity -1.
BlowupClass canonical_class(Int n, Int r);

// h^0(aF + bH) = (b+1)(2a+2+nb)/2, valid for a >= 0, b >= -1.
Int h0_nef(const DivisorClass& c);

// Riemann-Roch expression (L^2 - L.K)/2, valid formally for any class.
Int virtual_dim_class(const BlowupClass& c);

// Virtual dimension of a system with a,b >= 0; cross-checked internally
// against the Riemann-Roch route.
Int virtual_dim(const SystemSpec& s);

// max(virtual_dim, -1).
Int expected_dim(const SystemSpec& s);

// Ample (equivalently very ample) classes are exactly a > 0, b > 0.
bool is_ample(const DivisorClass& c);

// Decomposition of an effective class as q*Gamma_n + (a1*F + b1*H) with
// a1,b1 >= 0 and base-point-free residual.  Returns (q, residual).
std::pair<Int, DivisorClass> effective_decomposition(const DivisorClass& c);

// The class of the (-n)-curve Gamma_n = H - nF on the blow-up at r points.
// Requires n >= 1: F_0 has no Gamma-curve.
BlowupClass gamma_class(Int n, Int r);

}  // namespace scrollsys
