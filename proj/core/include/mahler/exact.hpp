#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "mahler/laurent.hpp"

namespace mahler {

using Rational = boost::multiprecision::cpp_rational;

// a + b i with rational parts. Enough arithmetic for BasicLaurentPoly.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  bool is_integer() const;
  std::string str() const;
};

using ExactLaurentPoly = BasicLaurentPoly<GaussianRational>;

// Exact conversion: every finite double is a dyadic rational.
Rational exact_rational(double v);
ExactLaurentPoly to_exact(const LaurentPoly& p);
LaurentPoly to_double(const ExactLaurentPoly& p);

}  // namespace mahler
