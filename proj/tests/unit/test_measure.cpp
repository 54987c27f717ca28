#include <doctest.h>

#include "generators.hpp"
#include "mahler/errors.hpp"
#include "mahler/measure.hpp"
#include "oracles.hpp"

using namespace mahler;
using doctest::Approx;

namespace {

std::vector<Complex> sorted_real(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  return v;
}

LaurentPoly Q(Complex r) { return family_member(tempered_family_base(), r); }

}  // namespace

TEST_CASE("roots_complex examples") {
  std::vector<Complex> c{1, 4.25, 1};
  auto r = sorted_real(roots_complex(c));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - Complex(-4)) < 1e-13);
  CHECK(std::abs(r[1] - Complex(-0.25)) < 1e-13);

  auto s = roots_complex(std::vector<Complex>{1, 0, 1});
  REQUIRE(s.size() == 2);
  CHECK(std::abs(s[0] - Complex(0, -1)) < 1e-14);
  CHECK(std::abs(s[1] - Complex(0, 1)) < 1e-14);

  const double a = 1.5, b = 1.2, R = a + 1 / a + b + 1 / b + 4;
  auto t = roots_complex(std::vector<Complex>{1, -(R + b + 1 / b), 1});
  REQUIRE(t.size() == 2);
  CHECK(std::abs(t[0] * t[1] - 1.0) < 1e-13);
}

TEST_CASE("roots_complex preconditions and determinism") {
  CHECK_THROWS_AS(roots_complex(std::vector<Complex>{1}), UsageError);
  CHECK_THROWS_AS(roots_complex(std::vector<Complex>{0, 0}), UsageError);
  std::vector<Complex> c{Complex(1, 2), -3, Complex(0, 1), 2, 1};
  CHECK(roots_complex(c) == roots_complex(c));
}

TEST_CASE("property: roots_complex recovers planted roots") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = rng.integer(1, 12);
    std::vector<Complex> planted;
    for (int k = 0; k < deg; ++k) planted.push_back(rng.complex_in_disc(3));
    auto c = oracle::from_roots(planted, rng.complex_in_box(0.5, 2));
    auto got = roots_complex(c);
    REQUIRE(got.size() == planted.size());
    double scale = 0;
    for (auto x : c) scale += std::abs(x);
    for (auto z : got) CHECK(std::abs(oracle::horner(c, z)) <= 1e-9 * scale * std::pow(1 + std::abs(z), deg));
  }
}

TEST_CASE("jensen_circle examples") {
  CHECK(jensen_circle(2, 1) == Approx(std::log(2.0)));
  CHECK(jensen_circle(0.5, 1) == 0.0);
  CHECK(jensen_circle(3, 5) == Approx(std::log(5.0)));
}

TEST_CASE("mahler_direct examples") {
  auto s = mahler_direct(parse_poly("x + y + 1"), Torus::unit(2));
  CHECK(std::abs(s.value - oracle::smyth_linear()) < 1e-6);
  CHECK(s.method == Method::Direct);
  CHECK(s.est_error >= 0);
  REQUIRE(s.quad.has_value());

  auto mono = mahler_direct(parse_poly("5x", 2), Torus({2.5, 0.3}));
  CHECK(mono.value == Approx(std::log(5.0) + std::log(2.5)).epsilon(1e-12));

  auto q0 = mahler_direct(Q(0), Torus({10, 4}));
  CHECK(q0.value == Approx(std::log(10.0)).epsilon(1e-9));
}

TEST_CASE("mahler_jensen examples") {
  auto s = mahler_jensen(parse_poly("x + y + 1"), Torus::unit(2));
  CHECK(std::abs(s.value - oracle::smyth_linear()) < 5e-8);
  CHECK(s.method == Method::Jensen);
  auto d = mahler_direct(parse_poly("x + y + 1"), Torus::unit(2));
  CHECK(std::abs(s.value - d.value) < 1e-6);

  CHECK(mahler_jensen(parse_poly("x + y + 3"), Torus::unit(2)).value == Approx(std::log(3.0)));

  auto q6a = mahler_jensen(Q(6), Torus({1.2, 1.1}));
  auto q6 = mahler_jensen(Q(6), Torus::unit(2));
  CHECK(std::abs(q6a.value - q6.value) < 1e-6);
}

TEST_CASE("univariate measures via Jensen") {
  auto p = parse_poly("x^2 + 4.25x + 1");
  CHECK(mahler_univariate(p, 1).value == Approx(std::log(4.0)));
  CHECK(mahler_univariate(p, 10).value == Approx(2 * std::log(10.0)));
  CHECK(mahler_univariate(p, 1).value ==
        Approx(mahler_direct(p, Torus::unit(1)).value).epsilon(1e-12));
}

TEST_CASE("Torus validation and method names") {
  CHECK_THROWS_AS(Torus({1, -1}), UsageError);
  CHECK_THROWS_AS(Torus({1, 0}), UsageError);
  CHECK_THROWS_AS(Torus({std::numeric_limits<double>::infinity()}), UsageError);
  CHECK(Torus::unit(3).is_unit());
  CHECK_FALSE(Torus({1, 2}).is_unit());
  for (auto m : {Method::Direct, Method::Jensen, Method::Series, Method::ClosedForm})
    CHECK(method_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(method_from_string("simpson"), UsageError);
  CHECK_THROWS_AS(mahler_direct(parse_poly("x + y"), Torus::unit(3)), UsageError);
  CHECK_THROWS(mahler_direct(LaurentPoly(), Torus::unit(1)));
}

TEST_CASE("property: direct and Jensen engines agree") {
  oracle::Rng rng(1234);
  int tested = 0;
  while (tested < 25) {
    LaurentPoly p = gen::random_poly(rng, 2, rng.integer(2, 6), 1);
    p = p + LaurentPoly::variable(2, 1) * rng.complex_in_box(-2, 2);
    if (p.max_exponent(1) - p.min_exponent(1) > 3 || p.max_exponent(0) - p.min_exponent(0) > 3) continue;
    Torus t({rng.uniform(0.5, 2), rng.uniform(0.5, 2)});
    if (gen::torus_min_lower_bound(p, t) <= 1e-3) continue;
    ++tested;
    auto d = mahler_direct(p, t);
    auto j = mahler_jensen(p, t);
    CAPTURE(to_string(p));
    CAPTURE(t.radii[0]);
    CAPTURE(t.radii[1]);
    CHECK(std::abs(d.value - j.value) <= 1e-6);
  }
}

TEST_CASE("property: measure is additive over products") {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 6; ++trial) {
    LaurentPoly p = gen::random_poly(rng, 2, 3, 1), q = gen::random_poly(rng, 2, 3, 1);
    Torus t({rng.uniform(0.5, 2), rng.uniform(0.5, 2)});
    if (gen::torus_min_lower_bound(p, t) <= 1e-2 || gen::torus_min_lower_bound(q, t) <= 1e-2)
      continue;
    GridSpec g = GridSpec::uniform(2, 512);
    const double lhs = mahler_direct(p * q, t, g).value;
    const double rhs = mahler_direct(p, t, g).value + mahler_direct(q, t, g).value;
    CHECK(std::abs(lhs - rhs) < 1e-6);
  }
}

TEST_CASE("symmetries of the tempered family") {
  const double a = 1.3, b = 0.8;
  const LaurentPoly q = Q(7);
  const double m = mahler_jensen(q, Torus({a, b})).value;
  CHECK(std::abs(mahler_jensen(q, Torus({b, a})).value - m) < 1e-6);
  CHECK(std::abs(mahler_jensen(q, Torus({1 / a, b})).value - m) < 1e-6);
  CHECK(std::abs(mahler_jensen(q, Torus({1 / a, 1 / b})).value - m) < 1e-6);
  CHECK(std::abs(mahler_direct(q, Torus({1 / a, 1 / b})).value - m) < 1e-6);
}

TEST_CASE("property: monomials are exact") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.integer(1, 3);
    std::vector<int> e(static_cast<std::size_t>(n));
    std::vector<double> radii;
    const Complex c = rng.complex_in_box(-5, 5);
    double expect = std::log(std::abs(c));
    for (int i = 0; i < n; ++i) {
      e[static_cast<std::size_t>(i)] = rng.integer(-4, 4);
      radii.push_back(rng.uniform(0.2, 5));
      expect += e[static_cast<std::size_t>(i)] * std::log(radii.back());
    }
    auto p = LaurentPoly::monomial(n, std::span<const int>(e), c);
    auto r = mahler_direct(p, Torus(radii), GridSpec::uniform(n, 16));
    CHECK(std::abs(r.value - expect) < 1e-12);
  }
}

TEST_CASE("root_slice reports degree drops") {
  auto f = factor_in_variable(parse_poly("(x - 1) y^2 + y + 1"), 1);
  auto ok = root_slice(f, 1, oracle::kPi);
  CHECK(ok.roots.size() == 2);
  CHECK(ok.degree_drop == 0);
  auto drop = root_slice(f, 1, 0);
  CHECK(drop.degree_drop >= 1);
  CHECK(drop.roots.size() <= 1);
}
