#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mahler/laurent.hpp"
#include "mahler/quad.hpp"

namespace mahler {

struct Torus {
  std::vector<double> radii;

  Torus() = default;
  explicit Torus(std::vector<double> r);
  static Torus unit(int n) { return Torus(std::vector<double>(static_cast<std::size_t>(n), 1.0)); }

  int dims() const { return static_cast<int>(radii.size()); }
  double operator[](int i) const { return radii[static_cast<std::size_t>(i)]; }
  bool is_unit() const;
};

enum class Method { Direct, Jensen, Series, ClosedForm };
std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct MeasureResult {
  double value = 0;
  double est_error = 0;
  Method method = Method::Direct;
  std::optional<QuadResult> quad;
  int terms = 0;  // series terms or closed-form pieces; 0 for grid engines
};

struct RootSlice {
  double at_angle = 0;
  std::vector<Complex> roots;
  double leading_abs = 0;
  int degree_drop = 0;  // > 0 when the leading coefficients vanish at this node
};

// Roots of sum_j coeffs[j] z^j (ascending order). Trailing zero coefficients
// are trimmed; exact zero roots are split off first. Aberth-Ehrlich iteration
// from a staggered circle, one Newton polish step, output sorted by argument
// then modulus. Throws NumericalFailure after 200 sweeps.
std::vector<Complex> roots_complex(std::span<const Complex> coeffs, double tol = 1e-12);

// Ascending coefficient list of a univariate Laurent polynomial with the
// pole cleared; pole_order receives the cleared power.
std::vector<Complex> dense_coefficients(const LaurentPoly& p1, int& pole_order);

// log max(|z0|, radius).
double jensen_circle(Complex z0, double radius);

// m over |x| = radius of a univariate Laurent polynomial, from its roots.
MeasureResult mahler_univariate(const LaurentPoly& p1, double radius);

// Torus average of log|p| on the grid; spec defaults to GridSpec::defaults(n).
MeasureResult mahler_direct(const LaurentPoly& p, const Torus& t,
                            std::optional<GridSpec> spec = std::nullopt);

// Roots in y of p(x, y) at x = a e^{i theta}.
RootSlice root_slice(const YFactorization& f, double a, double theta);

// Two-variable measure via Jensen's formula in y and a 1-D grid in x.
MeasureResult mahler_jensen(const LaurentPoly& p, const Torus& t,
                            std::optional<GridSpec> spec = std::nullopt);

// Min and max of |p| over a uniform grid of `per_dim` nodes per dimension.
std::pair<double, double> modulus_range_on_torus(const LaurentPoly& p, const Torus& t,
                                                 int per_dim);

}  // namespace mahler
