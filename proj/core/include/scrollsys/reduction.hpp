#pragma once

// The fixed-component reduction procedure, the (-1)-speciality verdict, the
// classifier for the known (-1)-special homogeneous families with m <= 3,
// and the orbit-counting helpers.

#include <cstdint>
#include <optional>
#include <string>

#include "scrollsys/curves.hpp"
#include "scrollsys/lattice.hpp"

namespace scrollsys {

enum class StepKind { MinusOne, Gamma, Exceptional };

struct ReductionStep {
  StepKind kind;
  BlowupClass cls;     // the subtracted curve class, aligned with the point slots
  Int coefficient;     // > 0
};

struct ReductionTrace {
  SystemSpec initial;
  std::vector<ReductionStep> steps;
  BlowupClass final;
  // Set when the procedure proved the system empty on the way (all fibers of
  // a ruling became fixed); the final class is the state at that point.
  bool empty_detected = false;
  Int iterations = 0;
  Int b_cap_used = 0;
  Int m_cap_used = 0;
};

struct ReduceOptions {
  Int max_iterations = 100000;
  std::optional<Int> b_cap;  // widens the candidate-curve cap
  std::optional<Int> m_cap;
  // When set, each step subtracts a uniformly random candidate with negative
  // product instead of the most negative one (order-independence checks).
  std::optional<std::uint64_t> shuffle_seed;
};

// Step 1: while some candidate (-1)-curve E has d = L.E < 0, subtract |d|*E.
// Step 2: if n >= 1 and L.Gamma_n < 0, subtract one Gamma_n and return to
// step 1.  Ties in step 1 go to the most negative product, then the
// canonically least class.  Stops early, flagging empty_detected, once a
// ruling class has negative product with every fiber (b < 0, or a < 0 on
// F_0): such a system has no members and the procedure loses meaning.
ReductionTrace reduce(const SystemSpec& s, const ReduceOptions& opts = {});

struct Table1Match {
  int row = 0;              // 1..11
  std::string family;       // e.g. "L_n(2e,2,2^{2e+n+1})"
  Int v_table = 0;          // the published virtual dimension for this row
  Int l_table = 0;          // the published effective dimension
  Int v_computed = 0;       // virtual_dim(s); differs from v_table only on
  bool v_discrepancy = false;  // the flagged L6(0,4,3^11) row
};

struct SpecialityVerdict {
  bool minus_one_special = false;
  Int v_initial = 0;
  Int v_final = 0;
  ReductionTrace trace;
  std::optional<Table1Match> table_row;
};

// Runs reduce and compares virtual dimensions: the system is (-1)-special
// when the residual system M satisfies v(M) > v(L) and M is non-empty
// (v(M) >= 0 after full reduction).
SpecialityVerdict is_minus_one_special(const SystemSpec& s, const ReduceOptions& opts = {});

// Matches a homogeneous system with m <= 3 against the known (-1)-special
// families; returns nullopt when no row applies.  m > 3 is unsupported.
std::optional<Table1Match> classify_table1(const SystemSpec& s);

struct Table1Instance {
  SystemSpec spec;
  int row = 0;
  Int v_expected = 0;  // the published value (see v_discrepancy)
  Int l_expected = 0;
  bool v_discrepancy = false;
};

// Concrete systems from every classified family with parameter e <= e_max,
// 1 <= n <= n_max (the sporadic rows keep their fixed n), and section count
// h0 <= max_columns.  Every instance round-trips through classify_table1.
std::vector<Table1Instance> table1_instances(Int e_max, Int n_max, Int max_columns);

// Exact multinomial r!/(k_1! ... k_s!); requires sum k_i = r, k_i >= 1.
Int orbit_count(Int r, const std::vector<Int>& k);

// Whether k_1! ... k_s! <= (r-s+1)! holds.
bool orbit_bound_holds(Int r, const std::vector<Int>& k);

}  // namespace scrollsys
