#include <doctest.h>

#include <random>

#include "scrollsys/lattice.hpp"

using namespace scrollsys;

namespace {

BlowupClass cls(Int n, Int a, Int b, std::vector<Int> m = {}) {
  return make_class(n, a, b, std::move(m));
}

}  // namespace

TEST_CASE("checked arithmetic fails loudly") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), overflow_error);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), overflow_error);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), overflow_error);
}

TEST_CASE("intersection form on F_n") {
  // L6(0,4,3^11) . L6(2,1,1^11) = -1
  auto L = cls(6, 0, 4, std::vector<Int>(11, 3));
  auto E = cls(6, 2, 1, std::vector<Int>(11, 1));
  CHECK(intersect(L, E) == -1);

  // L6(4,2,2^11) . L6(2,1,1^11) = -2
  auto M = cls(6, 4, 2, std::vector<Int>(11, 2));
  CHECK(intersect(M, E) == -2);

  CHECK(intersect(cls(3, 0, 0), cls(3, 0, 0)) == 0);
  CHECK_THROWS_AS(intersect(cls(1, 1, 1), cls(2, 1, 1)), std::invalid_argument);
}

TEST_CASE("intersect pads shorter multiplicity lists with zeros") {
  auto with_points = cls(2, 1, 1, {2, 1});
  auto no_points = cls(2, 1, 1);
  CHECK(intersect(with_points, no_points) == intersect(no_points, no_points));
}

TEST_CASE("intersect is symmetric and bilinear") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> coeff(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Int n = static_cast<Int>(rng() % 7);
    auto rand_cls = [&] {
      std::vector<Int> m(4);
      for (auto& x : m) x = coeff(rng);
      return cls(n, coeff(rng), coeff(rng), std::move(m));
    };
    BlowupClass x = rand_cls(), y = rand_cls(), z = rand_cls();
    CHECK(intersect(x, y) == intersect(y, x));
    Int s = coeff(rng), t = coeff(rng);
    BlowupClass combo = cls(n, s * y.a() + t * z.a(), s * y.b() + t * z.b(),
                            {s * y.mults[0] + t * z.mults[0], s * y.mults[1] + t * z.mults[1],
                             s * y.mults[2] + t * z.mults[2], s * y.mults[3] + t * z.mults[3]});
    CHECK(intersect(x, combo) == s * intersect(x, y) + t * intersect(x, z));
  }
}

TEST_CASE("canonical class") {
  CHECK(canonical_class(0, 0) == cls(0, -2, -2));
  CHECK(canonical_class(2, 0) == cls(2, 0, -2));
  CHECK(canonical_class(6, 11) == cls(6, 4, -2, std::vector<Int>(11, -1)));
}

TEST_CASE("h0 on the nef range") {
  CHECK(h0_nef({6, 0, 4}) == 65);
  CHECK(h0_nef({3, 0, 0}) == 1);
  CHECK(h0_nef({1, 0, 6}) == 28);
  CHECK(h0_nef({4, 5, -1}) == 0);  // b = -1 allowed, zero sections
  CHECK_THROWS_AS(h0_nef({2, -1, 3}), std::out_of_range);
  CHECK_THROWS_AS(h0_nef({2, 1, -2}), std::out_of_range);
}

TEST_CASE("Riemann-Roch reproduces the section count on nef classes") {
  for (Int n = 0; n <= 8; ++n)
    for (Int a = 0; a <= 20; ++a)
      for (Int b = 0; b <= 8; ++b)
        CHECK(virtual_dim_class(cls(n, a, b)) + 1 == h0_nef({n, a, b}));
}

TEST_CASE("virtual and expected dimension") {
  CHECK(virtual_dim(make_homogeneous(1, 0, 4, 2, 5)) == -1);
  CHECK(virtual_dim(make_homogeneous(3, 7, 0, 3, 1)) == 1);
  CHECK(virtual_dim(make_homogeneous(6, 0, 4, 3, 11)) == -2);

  CHECK(expected_dim(make_homogeneous(1, 0, 6, 3, 5)) == -1);
  CHECK(expected_dim(make_system(4, 0, 0)) == 0);
  CHECK(expected_dim(make_homogeneous(5, 1, 4, 3, 10)) == -1);
  CHECK_THROWS_AS(virtual_dim(SystemSpec{cls(2, -1, 1)}), std::out_of_range);
}

TEST_CASE("ampleness is a > 0 and b > 0") {
  CHECK(is_ample({3, 1, 1}));
  CHECK_FALSE(is_ample({3, 0, 1}));
  CHECK_FALSE(is_ample({3, -1, 5}));
}

TEST_CASE("effective decomposition against the negative curve") {
  auto [q1, r1] = effective_decomposition({6, -2, 3});
  CHECK(q1 == 1);
  CHECK(r1 == DivisorClass{6, 4, 2});

  auto [q2, r2] = effective_decomposition({3, 3, 2});
  CHECK(q2 == 0);
  CHECK(r2 == DivisorClass{3, 3, 2});

  auto [q3, r3] = effective_decomposition({4, -7, 3});
  CHECK(q3 == 2);
  CHECK(r3 == DivisorClass{4, 1, 1});
  // residual is nef against the gamma curve
  CHECK(intersect(cls(4, r3.a, r3.b), gamma_class(4, 0)) >= 0);

  CHECK_THROWS_AS(effective_decomposition({0, -1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(effective_decomposition({3, -7, 1}), std::invalid_argument);
}

TEST_CASE("gamma class") {
  auto g = gamma_class(6, 11);
  CHECK(g == cls(6, -6, 1, std::vector<Int>(11, 0)));
  CHECK(intersect(cls(6, -2, 3, std::vector<Int>(11, 2)), g) == -2);
  for (Int n = 1; n <= 8; ++n)
    CHECK(intersect(gamma_class(n, 0), gamma_class(n, 0)) == -n);
  // any system meets gamma in its F-coefficient
  CHECK(intersect(cls(3, 5, 2, {1, 1}), gamma_class(3, 2)) == 5);
  CHECK_THROWS_AS(gamma_class(0, 3), std::invalid_argument);
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(make_system(2, 1, 1, {1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(make_class(-1, 0, 0), std::invalid_argument);
  CHECK(make_homogeneous(2, 3, 1, 2, 4).mults() == std::vector<Int>(4, 2));
}

TEST_CASE("canonical equality ignores multiplicity order") {
  CHECK(cls(2, 1, 1, {3, 1, 2}) == cls(2, 1, 1, {1, 2, 3}));
  CHECK_FALSE(cls(2, 1, 1, {3, 1, 2}) == cls(2, 1, 1, {3, 1, 1}));
}
