#include "mahler/special.hpp"

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>

namespace mahler {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kBernoulliTerms = 24;

// c[k] = B_{2k} / (2k+1)! for k = 1..kBernoulliTerms, from the exact
// Bernoulli recurrence.
const std::array<double, kBernoulliTerms + 1>& bernoulli_coeffs() {
  static const auto table = [] {
    using boost::multiprecision::cpp_rational;
    constexpr int n_max = 2 * kBernoulliTerms;
    std::array<cpp_rational, n_max + 1> b{};
    b[0] = 1;
    for (int m = 1; m <= n_max; ++m) {
      cpp_rational s = 0;
      cpp_rational binom = 1;  // C(m+1, j)
      for (int j = 0; j < m; ++j) {
        s += binom * b[j];
        binom = binom * (m + 1 - j) / (j + 1);
      }
      b[m] = -s / (m + 1);
    }
    std::array<double, kBernoulliTerms + 1> c{};
    cpp_rational fact = 1;
    for (int n = 1; n <= 2 * kBernoulliTerms + 1; ++n) {
      fact *= n;
      if (n % 2 == 1 && n >= 3) c[(n - 1) / 2] = cpp_rational(b[n - 1] / fact).convert_to<double>();
    }
    return c;
  }();
  return table;
}

Complex li2_series(Complex z) {
  Complex term = z, sum = 0;
  for (int k = 1; k < 200; ++k) {
    Complex add = term / static_cast<double>(k * k);
    sum += add;
    if (std::abs(add) <= 0.25 * kEps * std::abs(sum)) break;
    term *= z;
  }
  return sum;
}

// Li2 via u = -log(1 - z); valid and fast for |z| <= 1, Re z <= 1/2.
Complex li2_bernoulli(Complex z) {
  const Complex u = -std::log(1.0 - z);
  const Complex u2 = u * u;
  const auto& c = bernoulli_coeffs();
  Complex sum = u - 0.25 * u2;
  Complex p = u;
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    p *= u2;
    Complex add = c[k] * p;
    sum += add;
    if (std::abs(add) <= 0.25 * kEps * std::abs(sum)) break;
  }
  return sum;
}

// |z| <= 1.
Complex li2_unit_disc(Complex z) {
  if (std::abs(z) <= 0.5) return li2_series(z);
  if (z.real() > 0.5) {
    const Complex w = 1.0 - z;
    return -li2_bernoulli(w) + kZeta2 - std::log(z) * std::log(w);
  }
  return li2_bernoulli(z);
}

}  // namespace

double arg_principal(Complex z) {
  double a = std::arg(z);
  return a >= kPi ? a - 2 * kPi : a;
}

Complex li2(Complex z) {
  if (z == Complex{}) return 0;
  if (z == Complex{1.0, 0.0}) return kZeta2;
  if (std::abs(z) > 1.0) {
    const Complex l = std::log(-z);
    return -li2_unit_disc(1.0 / z) - kZeta2 - 0.5 * l * l;
  }
  return li2_unit_disc(z);
}

DilogValue<Complex> li2_with_error(Complex z) {
  Complex v = li2(z);
  double scale = std::abs(v) + kZeta2;
  if (std::abs(z) > 1.0) scale += std::norm(std::log(-z));
  return {v, 16 * kEps * scale};
}

double bloch_wigner(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return 0;
  if (z.imag() == 0.0) return 0;
  if (z.imag() < 0.0) return -bloch_wigner(std::conj(z));
  const double r = std::abs(z);
  if (!std::isfinite(r) || r == 0.0) return 0;
  if (r > 1.0) return -bloch_wigner(1.0 / z);
  if (std::abs(1.0 - z) < 1e-6) return -bloch_wigner(1.0 - z);
  return li2_unit_disc(z).imag() + arg_principal(1.0 - z) * std::log(r);
}

DilogValue<double> bloch_wigner_with_error(Complex z) {
  double v = bloch_wigner(z);
  return {v, 32 * kEps * (std::abs(v) + 1.0)};
}

}  // namespace mahler
