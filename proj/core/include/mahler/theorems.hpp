#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mahler/exact.hpp"
#include "mahler/laurent.hpp"
#include "mahler/measure.hpp"
#include "mahler/region.hpp"
#include "mahler/winding.hpp"

namespace mahler {

struct VerifyOptions {
  std::optional<GridSpec> grid;  // engine grid; engine default when empty
  int region_angles = 256;
  int region_raster = 1024;
  int winding_nodes = 4096;
};

struct RelationReport {
  MeasureResult lhs;       // m on the given torus
  MeasureResult rhs_base;  // m on the unit torus
  std::vector<int> nu;
  std::vector<IndexCount> nu_detail;
  double rhs = 0;
  double discrepancy = 0;
  double tol = 0;
  bool pass = false;
};

// Checks m_t(r - base) = m(r - base) + sum nu_j log t_j. Requires r in the
// unbounded complement of base(T_t) and of base(T_1); otherwise throws
// PreconditionNotMet. Two variables use the Jensen engine and the raster
// region model; three or more use the direct engine and require |r| to
// exceed the grid maximum of |base| on both tori.
RelationReport verify_main_relation(const LaurentPoly& base, Complex r, const Torus& t,
                                    double tol, const VerifyOptions& opt = {});

enum class CoefficientBranch { Leading, Constant };
std::string to_string(CoefficientBranch b);

struct BoundedValue {
  double value = 0;
  CoefficientBranch branch = CoefficientBranch::Leading;
  int nu = 0;
  Role role = Role::X;
  MeasureResult coefficient_measure;
};

// Value of m_t(r - base) for r in a bounded complement component, from the
// leading (all roots inside the test circle) or constant (all outside)
// coefficient in the role variable. Roots within a relative 1e-9 of the
// circle, or on both sides, throw MixedRoots.
BoundedValue bounded_component_value(const LaurentPoly& base, Complex r, const Torus& t,
                                     Role role, const VerifyOptions& opt = {},
                                     int probes = 256);

struct SeriesCoeffs {
  int N = 0;
  std::vector<Complex> coeffs;  // coeffs[n - 1] = a_n
};

// a_n = constant term of Q^n, n = 1..N.
SeriesCoeffs series_coefficients(const LaurentPoly& q, int N);
std::vector<GaussianRational> series_coefficients_exact(const LaurentPoly& q, int N);

// Average of Q^n over T_t by the trapezoid rule.
Complex torus_coefficient(const LaurentPoly& q, int n, const Torus& t, int nodes_per_dim = 64);

struct SeriesResult {
  Complex value;  // log r - sum a_n / (n r^n)
  int terms = 0;
  double radius_bound = 0;  // grid max of |Q| on the unit torus
  double tail_bound = 0;
  SeriesCoeffs coeffs;
  MeasureResult as_measure() const;
};

// Requires no constant term in Q, |r| above the radius bound (else
// DivergentSeries) and r off the negative real axis.
SeriesResult series_mtilde(const LaurentPoly& q, Complex r, int N);

// m(a x + b y + c) in closed form.
double cassaigne_maillot(Complex a, Complex b, Complex c);

}  // namespace mahler
