#include <doctest.h>

#include <random>

#include "scrollsys/io.hpp"
#include "scrollsys/transform.hpp"

using namespace scrollsys;

TEST_CASE("single-point transformation") {
  auto res = elementary_transform_point(make_system(2, 1, 3, {2}), 0);
  CHECK(res.spec == parse_system("L1(2,3,1)"));
  CHECK(res.excess_fibers == 0);
  CHECK(virtual_dim(res.spec) == virtual_dim(make_system(2, 1, 3, {2})));

  auto zero = elementary_transform_point(make_system(2, 0, 2, {2}), 0);
  CHECK(zero.spec == parse_system("L1(0,2,0)"));

  CHECK_THROWS_AS(elementary_transform_point(make_system(0, 1, 1, {1}), 0),
                  std::invalid_argument);
}

TEST_CASE("k-point transformation of homogeneous systems") {
  auto res = elementary_transform(make_homogeneous(5, 1, 4, 3, 10), 4);
  CHECK(res.spec == parse_system("L1(5,4,3^6,1^4)"));
  CHECK(res.points_on_section);
  CHECK(virtual_dim(res.spec) == virtual_dim(make_homogeneous(5, 1, 4, 3, 10)));

  auto flat = elementary_transform(make_homogeneous(3, 2, 2, 2, 4), 2);
  CHECK(flat.spec == parse_system("L1(2,2,2^2,0^2)"));

  CHECK_THROWS_AS(elementary_transform(make_homogeneous(2, 1, 3, 2, 5), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(elementary_transform(make_system(3, 1, 3, {2, 1}), 1),
                  std::invalid_argument);
}

TEST_CASE("negative image multiplicities become excess fiber notes") {
  auto res = elementary_transform(make_homogeneous(2, 3, 1, 2, 2), 1);
  // b - m = -1 at the moved point
  CHECK(res.excess_fibers == 1);
  CHECK(res.class_image.mults.back() == -1);
  for (Int m : res.spec.mults()) CHECK(m >= 0);
}

TEST_CASE("composition: k single steps equal one k-step as class maps") {
  auto s = make_homogeneous(4, 2, 5, 3, 6);
  BlowupClass image = s.cls;
  for (Int i = 0; i < 3; ++i)
    image = transform_class_at(image, static_cast<std::size_t>(s.r() - 1 - i));
  CHECK(image == elementary_transform(s, 3).class_image);
}

TEST_CASE("v is preserved on random valid transformations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Int n = 1 + static_cast<Int>(rng() % 5);
    Int a = static_cast<Int>(rng() % 10);
    Int b = static_cast<Int>(rng() % 7);
    Int m = static_cast<Int>(rng() % 4);
    Int r = 1 + static_cast<Int>(rng() % 8);
    Int k = 1 + static_cast<Int>(rng() % std::min(n, r));
    auto s = make_homogeneous(n, a, b, m, r);
    auto res = elementary_transform(s, k);
    CHECK(virtual_dim_class(res.class_image) == virtual_dim(s));
  }
}

TEST_CASE("(-1)-classes stay (-1)-classes") {
  // a multiplicity-1 compound curve
  MinusOneCurveClass c1{make_class(3, 2, 1, std::vector<Int>(8, 1)), std::nullopt};
  CHECK(transform_preserves_minus_one(c1, 1));
  CHECK(transform_preserves_minus_one(c1, 3));

  // the fiber through a point degenerates but keeps the lattice invariants
  MinusOneCurveClass fiber{make_class(4, 1, 0, {1}), std::nullopt};
  CHECK(transform_preserves_minus_one(fiber, 1));

  CHECK_THROWS_AS(transform_preserves_minus_one(fiber, 2), std::invalid_argument);
}
