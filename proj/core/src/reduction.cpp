#include "scrollsys/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace scrollsys {

namespace {

struct Candidate {
  StepKind kind;
  BlowupClass cls;
  Int product;
};

// Greedy placement: a family's multiplicities go to the points with the
// largest current multiplicities, which minimizes the intersection product
// over all placements (rearrangement inequality).
std::vector<Candidate> step1_candidates(const BlowupClass& cur, Int b_cap, Int m_cap) {
  std::vector<Candidate> out;
  Int r = cur.r();

  std::vector<std::size_t> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return cur.mults[i] > cur.mults[j];
  });

  std::vector<Int> prefix(static_cast<std::size_t>(r) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    prefix[i + 1] = checked_add(prefix[i], cur.mults[order[i]]);

  for (const auto& fam : curve_families(cur.n(), b_cap, m_cap, r)) {
    Int prod = checked_add(checked_mul(fam.a, cur.b()), checked_mul(cur.a(), fam.b));
    prod = checked_add(prod, checked_mul(cur.n(), checked_mul(cur.b(), fam.b)));
    prod = checked_sub(prod, checked_mul(fam.m, prefix[static_cast<std::size_t>(fam.r)]));
    if (prod >= 0) continue;
    std::vector<Int> mults(static_cast<std::size_t>(r), 0);
    for (Int i = 0; i < fam.r; ++i) mults[order[static_cast<std::size_t>(i)]] = fam.m;
    out.push_back({StepKind::MinusOne, make_class(cur.n(), fam.a, fam.b, std::move(mults)), prod});
  }

  // The exceptional divisor over a point with negative multiplicity is a
  // (-1)-curve with negative product; subtracting it clears the entry.
  for (Int i = 0; i < r; ++i) {
    Int m = cur.mults[static_cast<std::size_t>(i)];
    if (m < 0) {
      std::vector<Int> mults(static_cast<std::size_t>(r), 0);
      mults[static_cast<std::size_t>(i)] = -1;
      out.push_back({StepKind::Exceptional, make_class(cur.n(), 0, 0, std::move(mults)), m});
    }
  }
  return out;
}

bool candidate_less(const Candidate& x, const Candidate& y) {
  if (x.product != y.product) return x.product < y.product;
  auto kx = std::make_tuple(x.cls.b(), x.cls.a(), x.cls.mults);
  auto ky = std::make_tuple(y.cls.b(), y.cls.a(), y.cls.mults);
  return kx < ky;
}

void subtract(BlowupClass& cur, const BlowupClass& e, Int t) {
  cur.base.a = checked_sub(cur.base.a, checked_mul(t, e.a()));
  cur.base.b = checked_sub(cur.base.b, checked_mul(t, e.b()));
  for (std::size_t i = 0; i < e.mults.size(); ++i)
    cur.mults[i] = checked_sub(cur.mults[i], checked_mul(t, e.mults[i]));
}

}  // namespace

ReductionTrace reduce(const SystemSpec& s, const ReduceOptions& opts) {
  ReductionTrace trace;
  trace.initial = s;
  BlowupClass cur = s.cls;

  Int max_mult = 1;
  for (Int m : s.mults()) max_mult = std::max(max_mult, m);
  Int b_cap0 = opts.b_cap.value_or(s.n() == 0 ? std::max(s.a(), s.b()) : s.b());
  Int m_cap = opts.m_cap.value_or(max_mult);
  trace.b_cap_used = b_cap0;
  trace.m_cap_used = m_cap;

  std::optional<std::mt19937_64> rng;
  if (opts.shuffle_seed) rng.emplace(*opts.shuffle_seed);

  while (true) {
    if (++trace.iterations > opts.max_iterations) {
      trace.final = cur;
      throw std::runtime_error("reduce: iteration bound exceeded on " +
                               std::to_string(trace.iterations) + " steps");
    }
    // A class with negative product against every fiber of a ruling bounds
    // no curves at all; stop and flag the system as empty.
    if (cur.b() < 0 || (cur.n() == 0 && cur.a() < 0)) {
      trace.empty_detected = true;
      break;
    }

    Int b_cap = std::min(b_cap0, cur.n() == 0 ? std::max(cur.a(), cur.b()) : cur.b());
    auto cands = step1_candidates(cur, std::max<Int>(b_cap, 0), m_cap);
    if (!cands.empty()) {
      const Candidate* pick = nullptr;
      if (rng) {
        std::uniform_int_distribution<std::size_t> dist(0, cands.size() - 1);
        pick = &cands[dist(*rng)];
      } else {
        pick = &*std::min_element(cands.begin(), cands.end(), candidate_less);
      }
      Int t = -pick->product;
      subtract(cur, pick->cls, t);
      trace.steps.push_back({pick->kind, pick->cls, t});
      continue;
    }
    if (cur.n() >= 1 && cur.a() < 0) {
      BlowupClass gamma = gamma_class(cur.n(), cur.r());
      subtract(cur, gamma, 1);
      trace.steps.push_back({StepKind::Gamma, gamma, 1});
      continue;
    }
    break;
  }
  trace.final = cur;
  return trace;
}

SpecialityVerdict is_minus_one_special(const SystemSpec& s, const ReduceOptions& opts) {
  SpecialityVerdict v;
  v.trace = reduce(s, opts);
  v.v_initial = virtual_dim_class(s.cls);
  v.v_final = virtual_dim_class(v.trace.final);
  v.minus_one_special =
      !v.trace.empty_detected && v.v_final > v.v_initial && v.v_final >= 0;
  bool homogeneous = true;
  for (Int m : s.mults())
    if (m != s.mults().front()) homogeneous = false;
  if (s.r() > 0 && homogeneous && s.mults().front() <= 3)
    v.table_row = classify_table1(s);
  return v;
}

namespace {

std::optional<Table1Match> classify_oriented(Int n, Int a, Int b, Int m, Int r) {
  auto match = [&](int row, std::string family, Int vt, Int lt) {
    Table1Match t;
    t.row = row;
    t.family = std::move(family);
    t.v_table = vt;
    t.l_table = lt;
    return t;
  };

  // sporadic rows
  if (n == 1 && a == 0 && b == 4 && m == 2 && r == 5)
    return match(1, "L1(0,4,2^5)", -1, 0);
  if (n == 1 && a == 0 && b == 6 && m == 3 && r == 5)
    return match(2, "L1(0,6,3^5)", -3, 0);
  if (n == 5 && a == 1 && b == 4 && m == 3 && r == 10)
    return match(3, "L5(1,4,3^10)", -1, 0);
  if (n == 6 && a == 0 && b == 4 && m == 3 && r == 11) {
    auto t = match(4, "L6(0,4,3^11)", -1, 0);
    t.v_discrepancy = true;  // published v is -1; the formulas give -2
    return t;
  }

  if (m == 2) {
    if (b == 2 && a >= 0 && a % 2 == 0 && r == a + n + 1)
      return match(5, "Ln(2e,2,2^{2e+n+1})", -1, 0);
    if (b == 0 && r >= 1 && a - 2 * r >= 0)
      return match(6, "Ln(e,0,2^r)", a - 3 * r, a - 2 * r);
  }
  if (m == 3) {
    Int e7 = a - n - 1;
    if (b == 2 && e7 >= 0 && e7 % 4 == 0 && r == e7 / 2 + n + 1)
      return match(7, "Ln(4e+n+1,2,3^{2e+n+1})", -1, 0);
    if (b == 3 && a % 3 == 1 && (a - 1) / 3 >= 0 && r == 2 * ((a - 1) / 3) + n + 1)
      return match(8, "Ln(3e+1,3,3^{2e+n+1})", 1, 2);
    if (b == 3 && a % 3 == 0 && r == 2 * (a / 3) + n + 1)
      return match(9, "Ln(3e,3,3^{2e+n+1})", -3, 0);
    if (b == 1 && r >= 1 && a >= 2 * r && 2 * a + n - 5 * r + 1 >= 0)
      return match(10, "Ln(e,1,3^r)", 2 * a + n - 6 * r + 1, 2 * a + n - 5 * r + 1);
    if (b == 0 && r >= 1 && a - 3 * r >= 0)
      return match(11, "Ln(e,0,3^r)", a - 6 * r, a - 3 * r);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Table1Match> classify_table1(const SystemSpec& s) {
  if (s.r() == 0) return std::nullopt;
  Int m = s.mults().front();
  for (Int mi : s.mults())
    if (mi != m)
      throw std::invalid_argument("classify_table1: homogeneous systems only");
  if (m > 3) throw std::invalid_argument("classify_table1: m > 3 unsupported");
  if (m < 2) return std::nullopt;

  auto res = classify_oriented(s.n(), s.a(), s.b(), m, s.r());
  // On F_0 the two rulings are interchangeable; canonicalize by swap.
  if (!res && s.n() == 0) res = classify_oriented(0, s.b(), s.a(), m, s.r());
  if (res) res->v_computed = virtual_dim(s);
  return res;
}

std::vector<Table1Instance> table1_instances(Int e_max, Int n_max, Int max_columns) {
  std::vector<Table1Instance> out;
  auto add = [&](int row, Int n, Int a, Int b, Int m, Int r, Int v, Int l,
                 bool discrepancy = false) {
    if (n > n_max) return;
    if (h0_nef(DivisorClass{n, a, b}) > max_columns) return;
    SystemSpec s = make_homogeneous(n, a, b, m, r);
    auto match = classify_table1(s);
    if (!match || match->row != row)
      throw std::logic_error("table1_instances: instance does not classify to its row");
    out.push_back({std::move(s), row, v, l, discrepancy});
  };

  add(1, 1, 0, 4, 2, 5, -1, 0);
  add(2, 1, 0, 6, 3, 5, -3, 0);
  add(3, 5, 1, 4, 3, 10, -1, 0);
  add(4, 6, 0, 4, 3, 11, -1, 0, true);  // published v; the formulas give -2

  for (Int n = 1; n <= n_max; ++n)
    for (Int e = 0; e <= e_max; ++e) {
      add(5, n, 2 * e, 2, 2, 2 * e + n + 1, -1, 0);
      add(7, n, 4 * e + n + 1, 2, 3, 2 * e + n + 1, -1, 0);
      add(8, n, 3 * e + 1, 3, 3, 2 * e + n + 1, 1, 2);
      add(9, n, 3 * e, 3, 3, 2 * e + n + 1, -3, 0);
      // The b <= 1 families keep e as the F-coefficient; the row constraints
      // force r small once e <= e_max.
      for (Int r = 1; 2 * r <= e; ++r)
        add(6, n, e, 0, 2, r, e - 3 * r, e - 2 * r);
      for (Int r = 1; 2 * r <= e; ++r)
        if (2 * e + n - 5 * r + 1 >= 0)
          add(10, n, e, 1, 3, r, 2 * e + n - 6 * r + 1, 2 * e + n - 5 * r + 1);
      for (Int r = 1; 3 * r <= e; ++r)
        add(11, n, e, 0, 3, r, e - 6 * r, e - 3 * r);
    }
  return out;
}

namespace {

using BigInt = unsigned __int128;

BigInt factorial128(Int x) {
  if (x > 33) throw overflow_error("factorial too large");
  BigInt f = 1;
  for (Int i = 2; i <= x; ++i) f *= static_cast<BigInt>(i);
  return f;
}

}  // namespace

Int orbit_count(Int r, const std::vector<Int>& k) {
  Int sum = 0;
  for (Int ki : k) {
    if (ki < 1) throw std::invalid_argument("orbit_count: parts must be positive");
    sum = checked_add(sum, ki);
  }
  if (sum != r) throw std::invalid_argument("orbit_count: parts must sum to r");
  BigInt num = factorial128(r);
  for (Int ki : k) num /= factorial128(ki);
  if (num > static_cast<BigInt>(INT64_MAX)) throw overflow_error("orbit_count overflow");
  return static_cast<Int>(num);
}

bool orbit_bound_holds(Int r, const std::vector<Int>& k) {
  Int sum = 0;
  for (Int ki : k) {
    if (ki < 1) throw std::invalid_argument("orbit_bound_holds: parts must be positive");
    sum = checked_add(sum, ki);
  }
  if (sum != r) throw std::invalid_argument("orbit_bound_holds: parts must sum to r");
  Int s = static_cast<Int>(k.size());
  BigInt lhs = 1;
  for (Int ki : k) lhs *= factorial128(ki);
  return lhs <= factorial128(r - s + 1);
}

}  // namespace scrollsys
