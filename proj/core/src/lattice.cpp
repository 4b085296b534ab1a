#include "scrollsys/lattice.hpp"

#include <algorithm>
#include <functional>

namespace scrollsys {

BlowupClass BlowupClass::canonical() const {
  BlowupClass c = *this;
  std::sort(c.mults.begin(), c.mults.end(), std::greater<Int>());
  return c;
}

bool operator==(const BlowupClass& x, const BlowupClass& y) {
  if (x.base != y.base) return false;
  return x.canonical().mults == y.canonical().mults;
}

BlowupClass make_class(Int n, Int a, Int b, std::vector<Int> mults) {
  if (n < 0) throw std::invalid_argument("scroll index n must be >= 0");
  return BlowupClass{DivisorClass{n, a, b}, std::move(mults)};
}

SystemSpec make_system(BlowupClass c) {
  if (c.n() < 0) throw std::invalid_argument("scroll index n must be >= 0");
  for (Int m : c.mults)
    if (m < 0) throw std::invalid_argument("system multiplicities must be >= 0");
  return SystemSpec{std::move(c)};
}

SystemSpec make_system(Int n, Int a, Int b, std::vector<Int> mults) {
  return make_system(make_class(n, a, b, std::move(mults)));
}

SystemSpec make_homogeneous(Int n, Int a, Int b, Int m, Int r) {
  if (r < 0) throw std::invalid_argument("point count must be >= 0");
  return make_system(n, a, b, std::vector<Int>(static_cast<std::size_t>(r), m));
}

Int intersect(const BlowupClass& c1, const BlowupClass& c2) {
  if (c1.n() != c2.n())
    throw std::invalid_argument("intersect: classes live on different scrolls");
  // a1*b2 + a2*b1 + n*b1*b2 - sum m1_i*m2_i
  Int res = checked_add(checked_mul(c1.a(), c2.b()), checked_mul(c2.a(), c1.b()));
  res = checked_add(res, checked_mul(c1.n(), checked_mul(c1.b(), c2.b())));
  std::size_t common = std::min(c1.mults.size(), c2.mults.size());
  for (std::size_t i = 0; i < common; ++i)
    res = checked_sub(res, checked_mul(c1.mults[i], c2.mults[i]));
  return res;
}

BlowupClass canonical_class(Int n, Int r) {
  if (n < 0 || r < 0) throw std::invalid_argument("canonical_class: n, r must be >= 0");
  return make_class(n, n - 2, -2, std::vector<Int>(static_cast<std::size_t>(r), -1));
}

Int h0_nef(const DivisorClass& c) {
  if (c.a < 0 || c.b < -1)
    throw std::out_of_range("h0_nef: requires a >= 0 and b >= -1");
  // (b+1)(2a+2+nb)/2; the product is always even in range.
  Int t = checked_add(checked_mul(2, c.a), checked_add(2, checked_mul(c.n, c.b)));
  Int num = checked_mul(checked_add(c.b, 1), t);
  return num / 2;
}

Int virtual_dim_class(const BlowupClass& c) {
  BlowupClass k = canonical_class(c.n(), c.r());
  Int self = intersect(c, c);
  Int lk = intersect(c, k);
  return checked_sub(self, lk) / 2;
}

Int virtual_dim(const SystemSpec& s) {
  if (s.a() < 0 || s.b() < 0)
    throw std::out_of_range("virtual_dim: requires a >= 0 and b >= 0");
  Int v = checked_sub(h0_nef(s.cls.base), 1);
  for (Int m : s.mults())
    v = checked_sub(v, checked_mul(m, checked_add(m, 1)) / 2);
  // Internal cross-check against the Riemann-Roch route.
  if (v != virtual_dim_class(s.cls))
    throw std::logic_error("virtual_dim: combinatorial and Riemann-Roch values disagree");
  return v;
}

Int expected_dim(const SystemSpec& s) { return std::max<Int>(virtual_dim(s), -1); }

bool is_ample(const DivisorClass& c) { return c.a > 0 && c.b > 0; }

std::pair<Int, DivisorClass> effective_decomposition(const DivisorClass& c) {
  if (c.b < 0) throw std::invalid_argument("effective_decomposition: b must be >= 0");
  if (c.a >= 0) return {0, c};
  if (c.n == 0)
    throw std::invalid_argument("effective_decomposition: a < 0 on F_0 is not effective");
  Int q = (-c.a + c.n - 1) / c.n;  // ceil(-a/n)
  Int a1 = checked_add(checked_mul(q, c.n), c.a);
  Int b1 = checked_sub(c.b, q);
  if (b1 < 0) throw std::invalid_argument("effective_decomposition: class is not effective");
  return {q, DivisorClass{c.n, a1, b1}};
}

BlowupClass gamma_class(Int n, Int r) {
  if (n < 1) throw std::invalid_argument("gamma_class: F_0 has no Gamma-curve");
  if (r < 0) throw std::invalid_argument("gamma_class: r must be >= 0");
  return make_class(n, -n, 1, std::vector<Int>(static_cast<std::size_t>(r), 0));
}

}  // namespace scrollsys
