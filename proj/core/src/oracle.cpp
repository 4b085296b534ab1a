#include "scrollsys/oracle.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace scrollsys {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 x, u64 y, u64 p) { return static_cast<u64>(u128(x) * y % p); }
inline u64 addmod(u64 x, u64 y, u64 p) {
  u64 r = x + y;
  return r >= p || r < x ? r - p : r;
}
inline u64 submod(u64 x, u64 y, u64 p) { return x >= y ? x - y : x + p - y; }

u64 powmod(u64 base, u64 exp, u64 p) {
  u64 r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return r;
}

inline u64 invmod(u64 x, u64 p) { return powmod(x, p - 2, p); }

// Falling factorial i(i-1)...(i-alpha+1) mod p.
u64 falling(Int i, Int alpha, u64 p) {
  u64 r = 1;
  for (Int t = 0; t < alpha; ++t) r = mulmod(r, static_cast<u64>(i - t) % p, p);
  return r;
}

}  // namespace

MonomialBasis basis(Int n, Int a, Int b) {
  if (n < 0 || a < 0 || b < 0) throw std::invalid_argument("basis: n, a, b must be >= 0");
  MonomialBasis out{n, a, b, {}};
  for (Int k = 0; k <= b; ++k)
    for (Int i = 0; i <= checked_add(a, checked_mul(n, k)); ++i)
      out.exponents.emplace_back(i, k);
  // Cardinality must match the nef-range section count.
  if (out.size() != h0_nef(DivisorClass{n, a, b}))
    throw std::logic_error("basis: cardinality mismatch with h0 formula");
  return out;
}

FpMatrix condition_matrix(const SystemSpec& s,
                          const std::vector<std::pair<u64, u64>>& points, u64 p) {
  Int max_mult = 0;
  for (Int m : s.mults()) max_mult = std::max(max_mult, m);
  if (static_cast<u64>(max_mult) >= p)
    throw std::invalid_argument("condition_matrix: field too small for multiplicities");
  if (static_cast<Int>(points.size()) != s.r())
    throw std::invalid_argument("condition_matrix: point count must equal r");

  MonomialBasis bas = basis(s.n(), s.a(), s.b());
  std::size_t cols = static_cast<std::size_t>(bas.size());
  std::size_t rows = 0;
  for (Int m : s.mults()) rows += static_cast<std::size_t>(m * (m + 1) / 2);

  FpMatrix mat;
  mat.rows = rows;
  mat.cols = cols;
  mat.data.assign(rows * cols, 0);

  std::size_t row = 0;
  for (std::size_t pt = 0; pt < points.size(); ++pt) {
    Int m = s.mults()[pt];
    u64 x = points[pt].first % p;
    u64 y = points[pt].second % p;
    // Powers up to the largest exponents present.
    Int max_i = s.a() + s.n() * s.b();
    std::vector<u64> xp(static_cast<std::size_t>(max_i) + 1, 1),
        yp(static_cast<std::size_t>(s.b()) + 1, 1);
    for (std::size_t t = 1; t < xp.size(); ++t) xp[t] = mulmod(xp[t - 1], x, p);
    for (std::size_t t = 1; t < yp.size(); ++t) yp[t] = mulmod(yp[t - 1], y, p);

    for (Int alpha = 0; alpha < m; ++alpha) {
      for (Int beta = 0; alpha + beta < m; ++beta) {
        for (std::size_t c = 0; c < cols; ++c) {
          auto [i, k] = bas.exponents[c];
          if (i < alpha || k < beta) continue;
          u64 coeff = mulmod(falling(i, alpha, p), falling(k, beta, p), p);
          coeff = mulmod(coeff, xp[static_cast<std::size_t>(i - alpha)], p);
          coeff = mulmod(coeff, yp[static_cast<std::size_t>(k - beta)], p);
          mat.at(row, c) = coeff;
        }
        ++row;
      }
    }
  }
  return mat;
}

std::size_t rank_mod_p(FpMatrix& m, u64 p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < m.cols; ++j)
        std::swap(m.at(pivot, j), m.at(rank, j));
    u64 inv = invmod(m.at(rank, col), p);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      u64 f = m.at(i, col);
      if (f == 0) continue;
      f = mulmod(f, inv, p);
      m.at(i, col) = 0;
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        u64 v = m.at(i, j);
        u64 sub = mulmod(f, m.at(rank, j), p);
        m.at(i, j) = submod(v, sub, p);
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::pair<u64, u64>> sample_points(Int r, u64 p, u64 seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist(1, p - 1);
  std::vector<std::pair<u64, u64>> pts;
  std::unordered_set<u64> used_x;
  while (pts.size() < static_cast<std::size_t>(r)) {
    u64 x = dist(rng);
    if (!used_x.insert(x).second) continue;  // distinct x-coordinates
    pts.emplace_back(x, dist(rng));
  }
  return pts;
}

OracleReport effective_dim_mc(const SystemSpec& s, u64 p, int trials, u64 seed) {
  if (trials < 1) throw std::invalid_argument("effective_dim_mc: trials >= 1 required");
  OracleReport rep;
  rep.spec = s;
  rep.prime = p;
  rep.h0 = h0_nef(s.cls.base);
  rep.v = virtual_dim(s);
  rep.e = std::max<Int>(rep.v, -1);

  Int max_rank = 0;
  for (int t = 0; t < trials; ++t) {
    u64 trial_seed = seed + static_cast<u64>(t) * 0x9e3779b97f4a7c15ULL;
    rep.seeds.push_back(trial_seed);
    auto pts = sample_points(s.r(), p, trial_seed);
    FpMatrix m = condition_matrix(s, pts, p);
    Int rank = static_cast<Int>(rank_mod_p(m, p));
    rep.rank_per_seed.push_back(rank);
    max_rank = std::max(max_rank, rank);
  }
  rep.l_est = rep.h0 - 1 - max_rank;
  rep.deficiency = rep.l_est - rep.e;
  rep.verdict = rep.l_est > rep.e    ? Verdict::Special
                : rep.l_est == rep.e ? Verdict::NonSpecial
                                     : Verdict::Inconclusive;  // cannot happen: l_est >= e
  return rep;
}

OracleReport oracle_consensus(const SystemSpec& s, const SpecialOptions& opts) {
  OracleReport r1 = effective_dim_mc(s, opts.prime1, opts.trials, opts.seed);
  OracleReport r2 = effective_dim_mc(s, opts.prime2, opts.trials, opts.seed + 1);
  if (r1.l_est == r2.l_est) return r1;
  // Disagreement across primes: escalate with more seeds, never average.
  OracleReport e1 = effective_dim_mc(s, opts.prime1, opts.trials + 2, opts.seed + 17);
  OracleReport e2 = effective_dim_mc(s, opts.prime2, opts.trials + 2, opts.seed + 18);
  if (e1.l_est == e2.l_est) return e1;
  e1.verdict = Verdict::Inconclusive;
  return e1;
}

Verdict is_special_mc(const SystemSpec& s, const SpecialOptions& opts) {
  return oracle_consensus(s, opts).verdict;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NonSpecial: return "non-special";
    case Verdict::Special: return "special";
    default: return "inconclusive";
  }
}

}  // namespace scrollsys
