#include <doctest.h>

#include "mahler/errors.hpp"
#include "mahler/region.hpp"
#include "mahler/winding.hpp"
#include "oracles.hpp"

using namespace mahler;
using doctest::Approx;

namespace {

const LaurentPoly& base() {
  static const LaurentPoly b = tempered_family_base();
  return b;
}

const RegionModel& model_10_4() {
  static const RegionModel m = build_region(base(), 10, 4);
  return m;
}

}  // namespace

TEST_CASE("family_extremes examples") {
  auto u = family_extremes(1, 1);
  CHECK(u.r_max == Approx(4));
  CHECK(u.r_min == Approx(0));
  CHECK(u.im_max == Approx(0));
  auto e = family_extremes(10, 4);
  CHECK(e.r_max == Approx(14.35));
  CHECK(e.r_min == Approx(5.85));
  CHECK(e.im_max == Approx(13.65));
  CHECK(std::abs(family_extremes(2, 0.5).r_min) < 1e-15);
  CHECK(family_extremes(1.2, 1.1).r_max == Approx(1.2 + 1 / 1.2 + 1.1 + 1 / 1.1));
}

TEST_CASE("build_region examples") {
  auto unit = build_region(base(), 1, 1);
  CHECK(unit.bounded_count() == 0);
  CHECK(classify_point(unit, 0).kind == PointClass::InRegion);

  const auto& m = model_10_4();
  CHECK(m.bounded_count() == 1);
  auto c0 = classify_point(m, 0);
  CHECK(c0.kind == PointClass::Bounded);
  CHECK(c0.index == 0);
  CHECK(m.components[0].bounded == false);
  CHECK(m.half_width > m.max_modulus + 1);

  auto thin = build_region(base(), 1.5, 1.07);
  CHECK(family_extremes(1.5, 1.07).r_min > 0);
  CHECK(thin.bounded_count() == 1);
  CHECK(classify_point(thin, 0).kind == PointClass::Bounded);
}

TEST_CASE("build_region preconditions") {
  CHECK_THROWS_AS(build_region(base(), 1, 1, 128), UsageError);
  CHECK_THROWS_AS(build_region(base(), 1, 1, 256, 256), UsageError);
  CHECK_THROWS_AS(build_region(base(), -1, 1), UsageError);
  CHECK_THROWS_AS(build_region(parse_poly("x + 1"), 1, 1), UsageError);
}

TEST_CASE("classify_point examples") {
  auto m = build_region(base(), 1.2, 1.1);
  CHECK(classify_point(m, 6).kind == PointClass::Unbounded);
  CHECK(classify_point(m, Complex(1e6, 0)).kind == PointClass::Unbounded);
  CHECK(classify_point(m, 0).kind == PointClass::InRegion);
  CHECK(to_string(classify_point(m, 6)) == "unbounded");
}

TEST_CASE("ellipse_conditions examples") {
  auto a = ellipse_conditions(10, 4);
  CHECK(a.outer_ok);
  CHECK(a.inner_ok);
  CHECK(a.x == Approx(std::log(10.0)));
  auto b = ellipse_conditions(1.5, 1.07);
  CHECK_FALSE(b.outer_ok);
  CHECK_FALSE(b.inner_ok);
  auto c = ellipse_conditions(2, 2);
  CHECK_FALSE(c.inner_defined);
  CHECK_FALSE(c.inner_ok);
}

TEST_CASE("ellipse_membership examples") {
  CHECK(ellipse_membership(20, 10, 4) == EllipseMembership::Outside);
  CHECK(ellipse_membership(0, 10, 4) == EllipseMembership::Inside);
  CHECK(ellipse_membership(10, 10, 4) == EllipseMembership::InRegion);
  CHECK(ellipse_membership(0, 1.5, 1.07) == EllipseMembership::Undecidable);
  CHECK(outer_ellipse(10, 4).semi_re == Approx(14.35));
  CHECK(inner_ellipse(10, 4).semi_re == Approx(5.85));
}

TEST_CASE("sampled model agrees with the closed-form ellipses") {
  const auto& m = model_10_4();
  const Ellipse outer = outer_ellipse(10, 4), inner = inner_ellipse(10, 4);
  const double margin = 2 * m.pixel_size();
  int counted = 0, agree = 0;
  for (int j = 0; j < 200; ++j) {
    for (int i = 0; i < 200; ++i) {
      const Complex r(-m.half_width + (i + 0.5) * 2 * m.half_width / 200,
                      -m.half_width + (j + 0.5) * 2 * m.half_width / 200);
      if (outer.approx_distance(r) < margin || inner.approx_distance(r) < margin) continue;
      ++counted;
      const auto s = classify_point(m, r).kind;
      const auto e = ellipse_membership(r, 10, 4);
      const bool ok = (s == PointClass::InRegion && e == EllipseMembership::InRegion) ||
                      (s == PointClass::Unbounded && e == EllipseMembership::Outside) ||
                      (s == PointClass::Bounded && e == EllipseMembership::Inside);
      agree += ok;
    }
  }
  REQUIRE(counted > 30000);
  CHECK(static_cast<double>(agree) / counted >= 0.99);
}

TEST_CASE("property: at most one bounded component") {
  oracle::Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = rng.uniform(0.3, 3), b = rng.uniform(0.3, 3);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(build_region(base(), a, b, 256, 512).bounded_count() <= 1);
  }
}

TEST_CASE("component representatives agree with winding indices") {
  const auto& m = model_10_4();
  auto [u1, u2] = nu_pair(family_member(base(), m.components[0].representative), 10, 4);
  CHECK(u1.nu == 0);
  CHECK(u2.nu == 0);
  auto [v1, v2] = nu_pair(family_member(base(), m.components[1].representative), 10, 4);
  CHECK(v1.nu == 1);
  CHECK(m.components[1].clearance > 0);
}

TEST_CASE("region_csv layout") {
  auto m = build_region(base(), 1, 1, 256, 512);
  const std::string csv = region_csv(m);
  CHECK(csv.rfind("re,im,label\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 512 * 512 + 1);
}
