#include "scrollsys/transform.hpp"

#include <algorithm>

namespace scrollsys {

BlowupClass transform_class_at(const BlowupClass& c, std::size_t point) {
  if (c.n() < 1) throw std::invalid_argument("elementary transformation needs n >= 1");
  if (point >= c.mults.size()) throw std::out_of_range("transform_class_at: bad point index");
  BlowupClass out = c;
  Int m = c.mults[point];
  out.base.n = c.n() - 1;
  out.base.a = checked_add(checked_sub(c.a(), m), c.b());
  out.mults[point] = checked_sub(c.b(), m);
  return out;
}

namespace {

TransformResult finish(const BlowupClass& image, Int moved) {
  TransformResult res;
  res.class_image = image;
  res.moved_points = moved;
  BlowupClass clamped = image;
  for (Int& m : clamped.mults) {
    if (m < 0) {
      res.excess_fibers = checked_add(res.excess_fibers, -m);
      m = 0;
    }
  }
  res.spec = make_system(std::move(clamped));
  res.points_on_section = true;
  return res;
}

}  // namespace

TransformResult elementary_transform_point(const SystemSpec& s, std::size_t point) {
  if (s.b() < 0) throw std::invalid_argument("elementary_transform_point: b must be >= 0");
  BlowupClass image = transform_class_at(s.cls, point);
  TransformResult res = finish(image, 1);
  // Virtual dimension is preserved by the class map; assert the bookkeeping.
  if (virtual_dim_class(image) != virtual_dim_class(s.cls))
    throw std::logic_error("elementary transformation failed to preserve v");
  return res;
}

TransformResult elementary_transform(const SystemSpec& s, Int k) {
  Int r = s.r();
  if (k < 1 || k > std::min(s.n(), r))
    throw std::invalid_argument("elementary_transform: k out of range");
  for (Int m : s.mults())
    if (m != s.mults().front())
      throw std::invalid_argument("elementary_transform: homogeneous systems only");
  BlowupClass image = s.cls;
  for (Int i = 0; i < k; ++i)
    image = transform_class_at(image, static_cast<std::size_t>(r - 1 - i));
  TransformResult res = finish(image, k);
  if (virtual_dim_class(image) != virtual_dim_class(s.cls))
    throw std::logic_error("elementary transformation failed to preserve v");
  return res;
}

bool transform_preserves_minus_one(const MinusOneCurveClass& c, Int k) {
  if (k < 1 || k > std::min(c.cls.n(), c.cls.r()))
    throw std::invalid_argument("transform_preserves_minus_one: k out of range");
  BlowupClass image = c.cls;
  for (Int i = 0; i < k; ++i) image = transform_class_at(image, static_cast<std::size_t>(i));
  return intersect(image, image) == -1 &&
         intersect(image, canonical_class(image.n(), image.r())) == -1;
}

}  // namespace scrollsys
