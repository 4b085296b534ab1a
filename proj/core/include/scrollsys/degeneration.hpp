#pragma once

// (k,s)-degenerations of a homogeneous system: the four-piece bookkeeping,
// the two recombination rules for the limit dimension l0, and a recursive
// prover that certifies l = max(v,-1) for non-special homogeneous systems of
// multiplicity 2 and 3.  l0 upper-bounds the generic dimension by
// semicontinuity and l >= max(v,-1) always, so l0 == max(v,-1) pins l.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "scrollsys/lattice.hpp"
#include "scrollsys/oracle.hpp"
#include "scrollsys/reduction.hpp"

namespace scrollsys {

// The four systems of a (k,s)-degeneration of L_n(a,b,m^r): k units of H
// shift to the exceptional piece and s of the points move there; the hat
// systems are the kernels after subtracting the double curve.
struct DegenerationSplit {
  SystemSpec original;
  Int k = 0;
  Int s = 0;             // points sent to the exceptional piece
  SystemSpec tilde;      // L_n(a, b-k, m^{r-s})
  SystemSpec exc;        // L_n(a+n(b-k), k, m^s)
  SystemSpec hat_tilde;  // L_n(a, b-k-1, m^{r-s})
  SystemSpec hat_exc;    // L_n(a+n(b-k+1), k-1, m^s)
  Int matching = 0;      // a + n(b-k): sections on the double curve
};

// Requires 0 <= k <= b and 0 <= points_to_exc <= r.  The virtual-dimension
// identities v(tilde) + v(exc) = v + matching and
// v(hat_exc) + v(tilde) = v(hat_tilde) + v(exc) = v - 1 are asserted on
// every constructed split.
DegenerationSplit split(const SystemSpec& s, Int k, Int points_to_exc);

// Limit dimension from the four effective dimensions (-1 denotes empty).
// With restriction dimensions r_X = l_X - lhat_X - 1:
//   r_tilde + r_exc <= matching - 1  ->  l0 = lhat_tilde + lhat_exc + 1
//   r_tilde + r_exc >= matching - 1  ->  l0 = l_tilde + l_exc - matching
// The two rules agree at the threshold (asserted).  rule_used, when given,
// receives 3 or 4 for the rule applied.
Int recombine_dim(const DegenerationSplit& sp, Int l_tilde, Int l_exc,
                  Int lhat_tilde, Int lhat_exc, int* rule_used = nullptr);

enum class LeafKind {
  Internal,        // resolved by a recursive degeneration
  Empty,           // l = -1: a ruling class meets every member negatively
  TableRow,        // dimension read off the classified special families
  OracleVerified,  // dimension from the modular interpolation oracle
  SmallDegreeBase, // b <= m+1: specialities fully classified in this range
  FewPointsBase,   // r <= n+3: few points in general position, non-special
};
const char* to_string(LeafKind k);

struct DimCertificate {
  SystemSpec root;
  Int v = 0;
  Int e = -1;
  Int l = -1;  // the claim
  bool special = false;
  LeafKind kind = LeafKind::Internal;
  std::optional<Table1Match> table_row;  // TableRow leaves
  std::optional<OracleReport> oracle;    // OracleVerified leaves
  // Internal nodes only:
  Int k = 0;
  Int s = 0;
  int rule = 0;  // 3 or 4
  Int l0 = -1;   // recombined limit dimension (== e when accepted)
  // The matching of sections across the double curve is assumed transverse;
  // the recombination rules are only valid under that hypothesis.
  bool transversality_assumed = false;
  // tilde, exc, hat_tilde, hat_exc
  std::vector<std::shared_ptr<const DimCertificate>> children;
};

// A sub-system the recursion cannot resolve: no admissible (k,s) yields
// l0 == max(v,-1) and the oracle fallback is inconclusive.  A first-class
// outcome, not a crash.
struct open_case_error : std::runtime_error {
  SystemSpec stuck;
  explicit open_case_error(SystemSpec s);
};

struct ProveOptions {
  SpecialOptions oracle;
  ReduceOptions reduce;
};

// Memoizing recursive prover.  Safe to share across threads.
class Prover {
 public:
  explicit Prover(ProveOptions opts = {}) : opts_(std::move(opts)) {}

  // Certificate for a non-special homogeneous system with m in {2,3}.
  // Throws std::invalid_argument on (-1)-special input (classify those
  // first) and open_case_error when stuck.
  std::shared_ptr<const DimCertificate> prove(const SystemSpec& s);

  // Dimension of any piece arising in the recursion, with leaf fallbacks.
  std::shared_ptr<const DimCertificate> dim(const SystemSpec& s);

 private:
  std::shared_ptr<const DimCertificate> internal_node(const SystemSpec& s);
  std::vector<Int> s_candidates(const SystemSpec& s, Int v, Int k) const;

  ProveOptions opts_;
  std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<const DimCertificate>> memo_;
};

// One-shot convenience wrapper around Prover::prove.
std::shared_ptr<const DimCertificate> prove_dimension(const SystemSpec& s,
                                                      const ProveOptions& opts = {});

// Indented human-readable rendering of a certificate tree.
std::string render(const DimCertificate& c);

}  // namespace scrollsys
