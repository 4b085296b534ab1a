#include "scrollsys/curves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace scrollsys {

bool operator==(const HomogeneousFamily& x, const HomogeneousFamily& y) {
  return x.a == y.a && x.b == y.b && x.m == y.m && x.r == y.r;
}

bool is_minus_one_class(const BlowupClass& c) {
  return intersect(c, c) == -1 && intersect(c, canonical_class(c.n(), c.r())) == -1;
}

namespace {

// Solves the linear (-1)-curve equation 2a + nb + 2b - rm - 1 = 0 for a.
std::optional<Int> solve_a(Int n, Int b, Int m, Int r) {
  Int num = checked_sub(checked_add(checked_mul(r, m), 1),
                        checked_add(checked_mul(n, b), checked_mul(2, b)));
  if (num % 2 != 0) return std::nullopt;
  return num / 2;
}

bool quadratic_holds(Int n, Int a, Int b, Int m, Int r) {
  // 2ab + nb^2 - rm^2 + 1 = 0
  Int lhs = checked_add(checked_mul(2, checked_mul(a, b)),
                        checked_mul(n, checked_mul(b, b)));
  lhs = checked_add(checked_sub(lhs, checked_mul(r, checked_mul(m, m))), 1);
  return lhs == 0;
}

BlowupClass homogeneous_class(Int n, Int a, Int b, Int m, Int r) {
  return make_class(n, a, b, std::vector<Int>(static_cast<std::size_t>(r), m));
}

}  // namespace

std::vector<MinusOneCurveClass> enumerate_homogeneous(Int n, Int m, Int b_max) {
  if (m <= 1)
    throw std::invalid_argument(
        "enumerate_homogeneous: m >= 2 required (use mult_one_catalogue for m = 1)");
  if (n < 0 || b_max < 1) throw std::invalid_argument("enumerate_homogeneous: bad bounds");

  // key (a,b,r) -> lexicographically least (q,p) witness
  std::map<std::tuple<Int, Int, Int>, ConicParam> found;

  Int qq = m * (m - 1);
  for (Int q = 1; q <= qq; ++q) {
    if (qq % q != 0) continue;
    Int p_bound = q * (2 * b_max + 1);
    for (Int p = -p_bound; p <= p_bound; ++p) {
      if (std::gcd(std::abs(p), q) != 1) continue;
      Int denom = m * p - 2 * q;
      if (denom == 0) continue;
      Int b_num = m * m * p + q;
      if (b_num % denom != 0) continue;
      Int b = b_num / denom;
      if (b < 0 || b > b_max) continue;
      Int r_num = p * (p * (m * m - m) + 3 * q);
      Int r_den = q * denom;
      if (r_num % r_den != 0) continue;
      Int r = r_num / r_den;
      if (r < 0) continue;
      auto a = solve_a(n, b, m, r);
      if (!a || *a < 0) continue;
      if (!quadratic_holds(n, *a, b, m, r)) continue;
      auto key = std::make_tuple(*a, b, r);
      auto it = found.find(key);
      if (it == found.end() || std::tie(q, p) < std::tie(it->second.q, it->second.p))
        found[key] = ConicParam{p, q, b, r};
    }
  }

  std::vector<MinusOneCurveClass> out;
  std::vector<std::tuple<Int, Int, Int>> keys;  // (b, a, r) sort order
  for (auto& [key, w] : found)
    keys.emplace_back(std::get<1>(key), std::get<0>(key), std::get<2>(key));
  std::sort(keys.begin(), keys.end());
  for (auto& [b, a, r] : keys) {
    ConicParam w = found.at(std::make_tuple(a, b, r));
    out.push_back(MinusOneCurveClass{homogeneous_class(n, a, b, m, r), w});
  }
  return out;
}

std::vector<MinusOneCurveClass> mult_one_catalogue(Int n, Int e_max) {
  if (n < 0) throw std::invalid_argument("mult_one_catalogue: n must be >= 0");
  std::vector<MinusOneCurveClass> out;
  out.push_back({homogeneous_class(n, 1, 0, 1, 1), std::nullopt});
  for (Int e = 0; e <= e_max; ++e)
    out.push_back({homogeneous_class(n, e, 1, 1, 2 * e + n + 1), std::nullopt});
  if (n == 1) out.push_back({homogeneous_class(1, 0, 2, 1, 5), std::nullopt});
  return out;
}

std::vector<HomogeneousFamily> curve_families(Int n, Int b_max, Int m_max, Int r_max) {
  std::vector<HomogeneousFamily> fams;
  auto add = [&](HomogeneousFamily f) {
    if (f.r > r_max || f.b > b_max) return;
    if (std::find(fams.begin(), fams.end(), f) == fams.end()) fams.push_back(f);
  };

  add({1, 0, 1, 1, std::nullopt});
  for (Int e = 0; 2 * e + n + 1 <= r_max; ++e)
    add({e, 1, 1, 2 * e + n + 1, std::nullopt});
  if (n == 1) add({0, 2, 1, 5, std::nullopt});
  if (n == 0) {
    // F and H play symmetric roles on F_0; include the swapped shapes.
    for (Int e = 2; 2 * e + 1 <= r_max; ++e)
      add({1, e, 1, 2 * e + 1, std::nullopt});
  }

  for (Int m = 2; m <= m_max; ++m) {
    if (b_max < 1) break;
    for (const auto& c : enumerate_homogeneous(n, m, b_max)) {
      HomogeneousFamily f{c.cls.a(), c.cls.b(), m, c.cls.r(), c.witness};
      add(f);
      if (n == 0) add({f.b, f.a, m, f.r, f.witness});
    }
  }
  return fams;
}

std::vector<MinusOneCurveClass> candidate_curves(const SystemSpec& s,
                                                 const CandidateConfig& cfg) {
  Int r = s.r();
  Int b_cap = cfg.b_cap.value_or(s.n() == 0 ? std::max(s.a(), s.b()) : s.b());
  Int max_mult = 1;
  for (Int m : s.mults()) max_mult = std::max(max_mult, m);
  Int m_cap = cfg.m_cap.value_or(max_mult);

  std::vector<MinusOneCurveClass> out;
  std::set<std::vector<Int>> seen;  // literal (a, b, mults...) placements

  std::vector<std::size_t> subset;
  for (const auto& fam : curve_families(s.n(), b_cap, m_cap, r)) {
    // All r_E-subsets of the r point slots.
    std::vector<Int> mults(static_cast<std::size_t>(r), 0);
    subset.assign(static_cast<std::size_t>(fam.r), 0);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      std::fill(mults.begin(), mults.end(), 0);
      for (std::size_t idx : subset) mults[idx] = fam.m;
      std::vector<Int> key;
      key.reserve(mults.size() + 2);
      key.push_back(fam.a);
      key.push_back(fam.b);
      key.insert(key.end(), mults.begin(), mults.end());
      if (seen.insert(std::move(key)).second) {
        out.push_back({make_class(s.n(), fam.a, fam.b, mults), fam.witness});
        if (out.size() > cfg.placement_limit)
          throw std::length_error("candidate_curves: placement limit exceeded");
      }
      // next subset
      std::size_t k = subset.size();
      if (k == 0) break;
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == static_cast<std::size_t>(r) - (k - (i - 1))) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace scrollsys
