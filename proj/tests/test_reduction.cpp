#include <doctest.h>

#include <map>

#include "scrollsys/io.hpp"
#include "scrollsys/reduction.hpp"

using namespace scrollsys;

namespace {

BlowupClass replay(const ReductionTrace& t) {
  BlowupClass acc = t.final;
  for (const auto& st : t.steps) {
    acc.base.a += st.coefficient * st.cls.a();
    acc.base.b += st.coefficient * st.cls.b();
    for (std::size_t i = 0; i < st.cls.mults.size(); ++i)
      acc.mults[i] += st.coefficient * st.cls.mults[i];
  }
  return acc;
}

}  // namespace

TEST_CASE("the worked reduction") {
  auto s = make_homogeneous(6, 0, 4, 3, 11);
  auto t = reduce(s);
  REQUIRE(t.steps.size() == 3);
  auto E = make_class(6, 2, 1, std::vector<Int>(11, 1));
  CHECK(t.steps[0].kind == StepKind::MinusOne);
  CHECK(t.steps[0].cls == E);
  CHECK(t.steps[0].coefficient == 1);
  CHECK(t.steps[1].kind == StepKind::Gamma);
  CHECK(t.steps[1].cls == gamma_class(6, 11));
  CHECK(t.steps[1].coefficient == 1);
  CHECK(t.steps[2].kind == StepKind::MinusOne);
  CHECK(t.steps[2].cls == E);
  CHECK(t.steps[2].coefficient == 2);
  CHECK(t.final == make_class(6, 0, 0, std::vector<Int>(11, 0)));
  CHECK_FALSE(t.empty_detected);
  CHECK(replay(t) == s.cls);
}

TEST_CASE("nef classes reduce to themselves") {
  auto s = make_system(4, 1, 1);
  auto t = reduce(s);
  CHECK(t.steps.empty());
  CHECK(t.final == s.cls);
}

TEST_CASE("double points on fibers") {
  auto t = reduce(make_homogeneous(3, 7, 0, 2, 2));
  REQUIRE(t.steps.size() == 2);
  for (const auto& st : t.steps) {
    CHECK(st.coefficient == 2);
    CHECK(st.cls.a() == 1);
    CHECK(st.cls.b() == 0);
  }
  CHECK(t.final == make_class(3, 3, 0, {0, 0}));
}

TEST_CASE("lattice conservation on assorted systems") {
  for (const char* text :
       {"L1(0,4,2^5)", "L1(0,6,3^5)", "L5(1,4,3^10)", "L2(4,2,2^7)", "L0(3,3,2^4)",
        "L2(0,3,2^5)", "L3(9,0,3^3)", "L1(2,3,1^8)", "L4(0,6,3^9)"}) {
    auto s = parse_system(text);
    auto t = reduce(s);
    CHECK(replay(t) == s.cls);
  }
}

TEST_CASE("confluence under randomized candidate choice") {
  for (const char* text :
       {"L1(0,4,2^5)", "L2(4,2,2^7)", "L6(0,4,3^11)", "L3(9,0,3^3)", "L0(2,4,2^6)"}) {
    auto s = parse_system(text);
    auto reference = reduce(s);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ReduceOptions opts;
      opts.shuffle_seed = seed;
      auto t = reduce(s, opts);
      CHECK(t.final == reference.final);
      CHECK(t.empty_detected == reference.empty_detected);
    }
  }
}

TEST_CASE("empty systems are detected, not looped over") {
  ReduceOptions opts;
  opts.max_iterations = 5000;
  auto t = reduce(parse_system("L1(0,2,2^5)"), opts);
  CHECK(t.empty_detected);
  auto v = is_minus_one_special(parse_system("L1(0,2,2^5)"));
  CHECK_FALSE(v.minus_one_special);
}

TEST_CASE("speciality verdicts") {
  auto worked = is_minus_one_special(make_homogeneous(6, 0, 4, 3, 11));
  CHECK(worked.minus_one_special);
  CHECK(worked.v_initial == -2);
  CHECK(worked.v_final == 0);
  REQUIRE(worked.table_row.has_value());
  CHECK(worked.table_row->row == 4);
  CHECK(worked.table_row->v_discrepancy);

  // a single (-1)-curve is its own system: v = l = 0, non-special
  auto curve = is_minus_one_special(make_homogeneous(2, 1, 1, 1, 5));
  CHECK_FALSE(curve.minus_one_special);

  auto plain = is_minus_one_special(make_homogeneous(2, 0, 3, 2, 5));
  CHECK_FALSE(plain.minus_one_special);
  CHECK(plain.v_initial == 0);
}

TEST_CASE("table classifier rows") {
  auto row5 = classify_table1(make_homogeneous(2, 2, 2, 2, 5));
  REQUIRE(row5.has_value());
  CHECK(row5->row == 5);
  CHECK(row5->v_table == -1);
  CHECK(row5->l_table == 0);
  CHECK(row5->v_computed == -1);

  auto row8 = classify_table1(make_homogeneous(1, 4, 3, 3, 4));
  REQUIRE(row8.has_value());
  CHECK(row8->row == 8);
  CHECK(row8->v_table == 1);
  CHECK(row8->l_table == 2);

  auto row6 = classify_table1(make_homogeneous(2, 5, 0, 2, 2));
  REQUIRE(row6.has_value());
  CHECK(row6->row == 6);
  CHECK(row6->v_table == -1);
  CHECK(row6->l_table == 1);

  CHECK_FALSE(classify_table1(make_homogeneous(3, 1, 1, 1, 2)).has_value());
  CHECK_THROWS_AS(classify_table1(make_homogeneous(3, 1, 1, 4, 2)), std::invalid_argument);
  CHECK_THROWS_AS(classify_table1(make_system(3, 1, 1, {2, 3})), std::invalid_argument);
}

TEST_CASE("classifier canonicalizes the F_0 swap") {
  // row 5 shape with a and b exchanged on F_0
  auto direct = classify_table1(make_homogeneous(0, 2, 2, 2, 3));
  REQUIRE(direct.has_value());
  CHECK(direct->row == 5);
  auto swapped = classify_table1(make_homogeneous(0, 0, 2, 2, 2));
  // L0(0,2,2^2) swaps to L0(2,0,2^2): row 6 with e=2, r=2 fails e>=2r; none
  CHECK_FALSE(swapped.has_value());
}

TEST_CASE("table instances classify back to their rows") {
  auto instances = table1_instances(3, 6, 3000);
  CHECK(instances.size() > 30);
  std::map<int, int> per_row;
  for (const auto& inst : instances) {
    ++per_row[inst.row];
    auto match = classify_table1(inst.spec);
    REQUIRE(match.has_value());
    CHECK(match->row == inst.row);
    CHECK(match->l_table == inst.l_expected);
    if (!inst.v_discrepancy) {
      CHECK(match->v_table == inst.v_expected);
      CHECK(virtual_dim(inst.spec) == inst.v_expected);
    } else {
      CHECK(virtual_dim(inst.spec) == inst.v_expected - 1);
    }
  }
  for (int row = 1; row <= 11; ++row) CHECK(per_row[row] > 0);
}

TEST_CASE("orbit counting") {
  CHECK(orbit_count(3, {1, 2}) == 3);
  CHECK(orbit_count(5, {1, 4}) == 5);
  CHECK(orbit_count(6, {2, 2, 2}) == 90);
  CHECK_THROWS_AS(orbit_count(5, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(orbit_count(3, {0, 3}), std::invalid_argument);

  CHECK(orbit_bound_holds(7, {3, 4}));
  CHECK(orbit_bound_holds(4, {1, 1, 1, 1}));
  CHECK(orbit_bound_holds(10, {5, 5}));
}
