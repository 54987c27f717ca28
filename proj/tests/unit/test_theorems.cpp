#include <doctest.h>

#include "mahler/errors.hpp"
#include "mahler/theorems.hpp"
#include "oracles.hpp"

using namespace mahler;
using doctest::Approx;

namespace {

const LaurentPoly& base() {
  static const LaurentPoly b = tempered_family_base();
  return b;
}

LaurentPoly base3() { return parse_poly("-(x + 1/x + y + 1/y + z + 1/z)"); }

}  // namespace

TEST_CASE("verify_main_relation examples") {
  auto r6 = verify_main_relation(base(), 6, Torus({1.2, 1.1}), 1e-5);
  CHECK(r6.pass);
  CHECK(r6.nu == std::vector<int>{0, 0});
  CHECK(r6.discrepancy == Approx(std::abs(r6.lhs.value - r6.rhs)));
  CHECK(r6.rhs == Approx(r6.rhs_base.value));

  CHECK(verify_main_relation(base(), 8, Torus({1.5, 1.5}), 1e-5).pass);
  auto r2i = verify_main_relation(base(), Complex(0, 2), Torus({1.2, 1.2}), 1e-5);
  CHECK(r2i.pass);
}

TEST_CASE("verify_main_relation refuses points inside the region") {
  CHECK_THROWS_AS(verify_main_relation(base(), 0, Torus({1.2, 1.1}), 1e-5), PreconditionNotMet);
  CHECK_THROWS_AS(verify_main_relation(base(), 3, Torus({1.2, 1.1}), 1e-5), PreconditionNotMet);
  CHECK_THROWS_AS(verify_main_relation(base(), 0, Torus({10, 4}), 1e-5), PreconditionNotMet);
}

TEST_CASE("relation holds across the unbounded component") {
  struct Case {
    Complex r;
    double a, b;
  };
  const std::vector<Case> cases{{5, 1.2, 1.1},          {6, 1.2, 1.1},         {10, 1.2, 1.1},
                                {Complex(6, 2), 1.2, 1.1}, {7, 1.5, 1.2},       {Complex(0, 5), 0.8, 1.3},
                                {Complex(0, 3), 2, 0.7},   {Complex(-8, 3), 1.4, 0.9},
                                {-9, 0.6, 0.7},            {Complex(5, -5), 1.1, 1.6}};
  for (const auto& c : cases) {
    CAPTURE(c.r);
    CAPTURE(c.a);
    CAPTURE(c.b);
    auto rep = verify_main_relation(base(), c.r, Torus({c.a, c.b}), 1e-5);
    CHECK(rep.pass);
    CHECK(rep.discrepancy <= 1e-5);
  }
}

TEST_CASE("nu does not depend on r within the unbounded component") {
  std::vector<int> first;
  for (Complex r : {Complex(5), Complex(8), Complex(0, 4), Complex(-6, 1)}) {
    auto rep = verify_main_relation(base(), r, Torus({1.2, 1.1}), 1e-5);
    if (first.empty()) first = rep.nu;
    CHECK(rep.nu == first);
  }
}

TEST_CASE("three-variable relation") {
  auto rep = verify_main_relation(base3(), 10, Torus({1.1, 1.05, 1.2}), 2e-3);
  CHECK(rep.pass);
  CHECK(rep.nu == std::vector<int>{0, 0, 0});
}

TEST_CASE("bounded_component_value examples") {
  const Torus t({10, 4});
  for (Complex r : {Complex(0), Complex(1), Complex(2), Complex(0, 3), Complex(-1.5, 0.5)}) {
    CAPTURE(r);
    auto v = bounded_component_value(base(), r, t, Role::X);
    CHECK(std::abs(v.value - std::log(10.0)) < 1e-6);
    CHECK(v.nu == 1);
    CHECK(v.branch == CoefficientBranch::Leading);
  }
  auto lin = bounded_component_value(parse_poly("-(x + y)"), 0.3, Torus({2, 1}), Role::X);
  CHECK(lin.value == Approx(std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("bounded_component_value preconditions") {
  CHECK_THROWS_AS(bounded_component_value(base(), 20, Torus({10, 4}), Role::X), PreconditionNotMet);
  CHECK_THROWS_AS(bounded_component_value(base(), 10, Torus({10, 4}), Role::X), PreconditionNotMet);
}

TEST_CASE("series_mtilde examples") {
  auto s0 = series_mtilde(base() * Complex(-1), 10, 0);
  CHECK(s0.value == std::log(Complex(10)));
  CHECK(s0.terms == 0);

  const LaurentPoly q = base() * Complex(-1);
  auto s = series_mtilde(q, 10, 40);
  const double d = mahler_direct(family_member(base(), 10), Torus::unit(2)).value;
  const double j = mahler_jensen(family_member(base(), 10), Torus::unit(2)).value;
  CHECK(std::abs(s.value.real() - d) < 1e-10);
  CHECK(std::abs(s.value.real() - j) < 1e-10);
  CHECK(s.as_measure().method == Method::Series);
  CHECK(s.radius_bound == Approx(4));

  CHECK_THROWS_AS(series_mtilde(q, 3, 10), DivergentSeries);
  CHECK_THROWS_AS(series_mtilde(q, -10, 10), PreconditionNotMet);
  CHECK_THROWS_AS(series_mtilde(family_member(base(), 1), 10, 10), UsageError);
}

TEST_CASE("series coefficients") {
  const LaurentPoly q = base() * Complex(-1);
  auto c = series_coefficients(q, 12);
  REQUIRE(c.coeffs.size() == 12);
  for (int n = 1; n <= 12; ++n) {
    CHECK(c.coeffs[static_cast<std::size_t>(n - 1)].real() == oracle::tempered_constant_term(n));
  }
  auto exact = series_coefficients_exact(q, 12);
  for (int m = 1; m <= 6; ++m) {
    const auto& a = exact[static_cast<std::size_t>(2 * m - 1)];
    CHECK(a.is_integer());
    CHECK(a.im == 0);
    CHECK(a.re == Rational(oracle::binom(2 * m, m)) * Rational(oracle::binom(2 * m, m)));
    CHECK(exact[static_cast<std::size_t>(2 * m - 2)].re == 0);
  }
}

TEST_CASE("series coefficients do not depend on the torus") {
  const LaurentPoly q = base() * Complex(-1);
  auto c = series_coefficients(q, 10);
  for (int n = 1; n <= 10; ++n) {
    const Complex t = torus_coefficient(q, n, Torus({1.7, 0.6}));
    const Complex a = c.coeffs[static_cast<std::size_t>(n - 1)];
    CAPTURE(n);
    CHECK(std::abs(t - a) <= 1e-9 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("cassaigne_maillot examples") {
  CHECK(std::abs(cassaigne_maillot(1, 1, 1) - oracle::smyth_linear()) < 1e-12);
  CHECK(cassaigne_maillot(1, 1, 3) == Approx(std::log(3.0)));
  const double d = mahler_direct(parse_poly("3x + 4y + 5"), Torus::unit(2)).value;
  CHECK(std::abs(cassaigne_maillot(3, 4, 5) - d) < 1e-5);
  CHECK(cassaigne_maillot(Complex(0, 3), Complex(-4, 0), Complex(3, 4)) == Approx(cassaigne_maillot(3, 4, 5)));
}

TEST_CASE("cassaigne_maillot is continuous at degenerate triangles") {
  oracle::Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const double b = rng.uniform(0.2, 3), c = rng.uniform(0.2, 3);
    for (double eps : {-1e-6, 1e-6}) {
      const double a = b + c + eps;
      CAPTURE(a);
      CHECK(std::abs(cassaigne_maillot(a, b, c) - std::log(a)) <= 1e-8);
    }
  }
}
