#include <doctest.h>

#include "mahler/exact.hpp"
#include "mahler/laurent.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace mahler;
using doctest::Approx;

namespace {

LaurentPoly Q0() { return parse_poly("x + 1/x + y + 1/y"); }

}  // namespace

TEST_CASE("evaluate examples") {
  CHECK(evaluate(parse_poly("x + 1/x"), {2.0}).real() == Approx(2.5));
  CHECK(std::abs(evaluate(parse_poly("x + x^-1 + y + y^-1 + 4"), {-1.0, -1.0})) < 1e-15);
  CHECK(evaluate(parse_poly("x+y+1"), {1.0, 1.0}).real() == Approx(3.0));
}

TEST_CASE("evaluate rejects a zero coordinate under a negative exponent") {
  CHECK_THROWS_AS(evaluate(parse_poly("x + 1/x"), {0.0}), DomainError);
  CHECK(evaluate(parse_poly("x + 2"), {0.0}).real() == 2.0);
  CHECK_THROWS_AS(evaluate(parse_poly("x + y"), {1.0}), UsageError);
}

TEST_CASE("canonical sparse form drops cancelled terms") {
  LaurentPoly p = parse_poly("x + y - x");
  CHECK(p == parse_poly("y", 2));
  CHECK(p.size() == 1);
  CHECK((parse_poly("x") - parse_poly("x")).is_zero());
}

TEST_CASE("mul and pow") {
  CHECK(parse_poly("x+1/x") * parse_poly("x-1/x") == parse_poly("x^2 - x^-2"));
  CHECK(pow(Q0(), 0) == LaurentPoly::constant(2, 1.0));
  CHECK(constant_term(pow(Q0(), 2)).real() == 4.0);
  CHECK(constant_term(pow(Q0(), 1)) == Complex{});
  CHECK(constant_term(pow(Q0(), 4)).real() == oracle::tempered_constant_term(4));
  CHECK(oracle::tempered_constant_term(4) == 36.0);
  CHECK_THROWS_AS(parse_poly("x") * parse_poly("x + y"), UsageError);
  CHECK_THROWS_AS(pow(Q0(), -1), UsageError);
}

TEST_CASE("constant terms of powers of the tempered polynomial") {
  for (int n = 0; n <= 12; ++n) {
    double ct = constant_term(pow(Q0(), n)).real();
    CAPTURE(n);
    CHECK(ct == oracle::tempered_constant_term(n));
    if (n % 2 == 0) {
      CHECK(ct == oracle::binom(n, n / 2) * oracle::binom(n, n / 2));
    } else {
      CHECK(ct == 0.0);
    }
  }
}

TEST_CASE("exact mode gives integer constant terms") {
  const ExactLaurentPoly q = to_exact(Q0());
  for (int m = 1; m <= 6; ++m) {
    GaussianRational ct = constant_term(pow(q, 2 * m));
    CHECK(ct.is_integer());
    const long long c = static_cast<long long>(oracle::binom(2 * m, m));
    CHECK(ct == GaussianRational(Rational(c * c), Rational(0)));
  }
  CHECK(exact_rational(0.1) != Rational(1, 10));
  CHECK(exact_rational(0.5) == Rational(1, 2));
  CHECK(exact_rational(-3.0) == Rational(-3));
}

TEST_CASE("factor_in_variable examples") {
  SUBCASE("tempered family in y") {
    const LaurentPoly q = parse_poly("x + 1/x + y + 1/y + 7");
    YFactorization f = factor_in_variable(q, 1);
    CHECK(f.pole_order == 1);
    CHECK(f.degree == 2);
    CHECK(f.leading == LaurentPoly::constant(1, 1.0));
    CHECK(f.constant == LaurentPoly::constant(1, 1.0));
    REQUIRE(f.middle.size() == 1);
    CHECK(f.middle[0] == parse_poly("x + 1/x + 7", 1));
    CHECK(f.reassemble() == q);
  }
  SUBCASE("linear") {
    YFactorization f = factor_in_variable(parse_poly("x + y + 3"), 1);
    CHECK(f.pole_order == 0);
    CHECK(f.degree == 1);
    CHECK(f.leading == LaurentPoly::constant(1, 1.0));
    CHECK(f.constant == parse_poly("x + 3", 1));
    CHECK(f.middle.empty());
  }
  SUBCASE("pure power") {
    YFactorization f = factor_in_variable(parse_poly("y^2", 2), 1);
    CHECK(f.pole_order == 0);
    CHECK(f.degree == 2);
    CHECK(f.constant.is_zero());
    REQUIRE(f.middle.size() == 1);
    CHECK(f.middle[0].is_zero());
  }
  SUBCASE("x role") {
    const LaurentPoly q = parse_poly("x + 1/x + y + 1/y");
    YFactorization f = factor_in_variable(q, 0);
    CHECK(f.pole_order == 1);
    CHECK(f.middle[0] == parse_poly("x + 1/x", 1));
    CHECK(f.reassemble() == q);
  }
  CHECK_THROWS_AS(factor_in_variable(parse_poly("x + 1", 2), 1), DegenerateFactorization);
  CHECK_THROWS_AS(factor_in_variable(parse_poly("x/y", 2), 1), DegenerateFactorization);
}

TEST_CASE("slice examples") {
  // Slices move the remaining variable to the first slot, so y + 1/y + 6
  // prints as x + 1/x + 6.
  CHECK(slice(parse_poly("x + 1/x + y + 1/y + 4"), 0, 1.0) == parse_poly("x + 1/x + 6", 1));
  CHECK(slice(parse_poly("x+y+1"), 1, -1.0) == parse_poly("x", 1));
  CHECK(slice(Q0(), 1, 4.0) == parse_poly("x + 1/x + 4.25", 1));
  CHECK_THROWS_AS(slice(parse_poly("x + 1"), 0, 1.0), UsageError);
}

TEST_CASE("parser accepts the documented syntax") {
  CHECK(parse_poly("x + x^-1 + y + y^-1 + 4") == parse_poly("x+1/x+y+1/y+4"));
  CHECK(parse_poly("2x^2y") == parse_poly("2*x^2*y"));
  CHECK(parse_poly("(1+2i)*x1^2*x2 - 3", 0).n_vars() == 2);
  CHECK(parse_poly("x3", 0).n_vars() == 3);
  CHECK(parse_poly("(x+1)^2") == parse_poly("x^2 + 2x + 1"));
  CHECK(parse_poly("x^(-2)") == parse_poly("1/x^2"));
  CHECK(parse_poly("-x - -y") == parse_poly("y - x"));
  CHECK(parse_poly("1e-3 x") == parse_poly("0.001*x"));
  CHECK(constant_term(parse_poly("2i", 1)) == Complex(0, 2));
  CHECK(parse_poly("x", 3).n_vars() == 3);
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_poly(""), UsageError);
  CHECK_THROWS_AS(parse_poly("x +"), UsageError);
  CHECK_THROWS_AS(parse_poly("x ^ 1.5"), UsageError);
  CHECK_THROWS_AS(parse_poly("1/(x+1)"), UsageError);
  CHECK_THROWS_AS(parse_poly("x1 + y"), UsageError);
  CHECK_THROWS_AS(parse_poly("x + y", 1), UsageError);
  CHECK_THROWS_AS(parse_poly("q"), UsageError);
  CHECK_THROWS_AS(parse_poly("x^40000"), UsageError);
}

TEST_CASE("printer round-trips exactly") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(1, 5);
    LaurentPoly p = gen::random_poly(rng, n, rng.integer(1, 6), 4);
    CAPTURE(to_string(p));
    CHECK(parse_poly(to_string(p), n) == p);
  }
  CHECK(to_string(LaurentPoly(2)) == "0");
}

TEST_CASE("property: evaluation is multiplicative") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(1, 3);
    LaurentPoly p = gen::random_poly(rng, n, 4, 3), q = gen::random_poly(rng, n, 4, 3);
    LaurentPoly pq = mul(p, q);
    std::vector<double> radii(static_cast<std::size_t>(n));
    for (auto& r : radii) r = rng.uniform(0.5, 2);
    for (int k = 0; k < 5; ++k) {
      std::vector<Complex> v(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) v[i] = std::polar(radii[i], rng.uniform(-oracle::kPi, oracle::kPi));
      Complex lhs = evaluate(pq, v), rhs = evaluate(p, v) * evaluate(q, v);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("property: factorization reassembles bit-exactly for rational inputs") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(1, 3);
    std::vector<LaurentPoly::Term> t;
    for (int k = 0; k < 5; ++k) {
      Exponent e{};
      for (int i = 0; i < n; ++i) e[i] = static_cast<std::int16_t>(rng.integer(-3, 3));
      t.emplace_back(e, Complex(rng.integer(-9, 9) / 8.0, rng.integer(-9, 9) / 4.0));
    }
    LaurentPoly p = LaurentPoly::from_terms(n, t);
    const int var = rng.integer(0, n - 1);
    if (p.is_zero() || !p.depends_on(var) || p.min_exponent(var) == p.max_exponent(var)) continue;
    CHECK(factor_in_variable(p, var).reassemble() == p);
  }
}

TEST_CASE("derivative and rescale") {
  CHECK(derivative(parse_poly("x^3 + 1/x + y"), 0) == parse_poly("3x^2 - x^-2", 2));
  const double radii[2] = {2.0, 0.5};
  CHECK(rescale(parse_poly("x + 1/y"), radii) == parse_poly("2x + 2/y"));
}
