#pragma once

// Independent effective-dimension computation: monomial basis of
// H^0(aF + bH), multiplicity conditions at random points over a large prime
// field, exact rank, Monte Carlo speciality verdicts.
//
// Verdicts are overwhelming-probability statements over F_p, not proofs:
// rank at random points can only drop below the generic rank, so
// l_est >= l always, with equality except with probability bounded by
// degree/p per trial.  A
// non-special verdict transfers to characteristic 0; a special verdict is
// special over F_p with char-0 speciality implied for generic p.

#include <cstdint>
#include <vector>

#include "scrollsys/lattice.hpp"

namespace scrollsys {

// Fixed published primes near 2^61 (Schwartz-Zippel headroom).
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1
inline constexpr std::uint64_t kSecondPrime = 2305843009213693967ULL;

// Monomials x^i y^k spanning H^0(aF + bH) in an affine chart away from
// Gamma_n and one fiber: 0 <= k <= b, 0 <= i <= a + n*k.
struct MonomialBasis {
  Int n = 0, a = 0, b = 0;
  std::vector<std::pair<Int, Int>> exponents;  // (i, k)

  Int size() const { return static_cast<Int>(exponents.size()); }
};

MonomialBasis basis(Int n, Int a, Int b);

struct FpMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> data;  // row-major

  std::uint64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Rows: all derivative conditions d^alpha/dx d^beta/dy with alpha+beta < m_i
// at each point; columns: basis monomials.  Requires p > max multiplicity.
FpMatrix condition_matrix(const SystemSpec& s,
                          const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
                          std::uint64_t p);

// In-place Gaussian elimination over F_p; returns the rank.
std::size_t rank_mod_p(FpMatrix& m, std::uint64_t p);

// Generic points for the oracle: distinct nonzero x, nonzero y.
std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_points(Int r, std::uint64_t p,
                                                                   std::uint64_t seed);

enum class Verdict { NonSpecial, Special, Inconclusive };

struct OracleReport {
  SystemSpec spec;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> seeds;
  Int h0 = 0;
  std::vector<Int> rank_per_seed;
  Int l_est = -1;      // h0 - 1 - max rank
  Int v = 0;
  Int e = -1;
  Int deficiency = 0;  // l_est - e
  Verdict verdict = Verdict::Inconclusive;
};

// l_est from the max rank over `trials` independent seeds derived from
// `seed`.  Identical (spec, prime, seed, trials) yields an identical report.
OracleReport effective_dim_mc(const SystemSpec& s, std::uint64_t p, int trials,
                              std::uint64_t seed);

struct SpecialOptions {
  std::uint64_t prime1 = kDefaultPrime;
  std::uint64_t prime2 = kSecondPrime;
  int trials = 1;
  std::uint64_t seed = 42;
};

// Convenience wrapper: runs the estimate over two primes; disagreeing l_est
// across primes escalates (more seeds), then reports Inconclusive rather
// than averaging.
Verdict is_special_mc(const SystemSpec& s, const SpecialOptions& opts = {});

// Two-prime estimate with escalation; returns the agreed report (the one
// from prime1) or a report with verdict Inconclusive.
OracleReport oracle_consensus(const SystemSpec& s, const SpecialOptions& opts = {});

const char* to_string(Verdict v);

}  // namespace scrollsys
