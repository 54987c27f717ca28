#include "mahler/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mahler/errors.hpp"
#include "mahler/special.hpp"

namespace mahler {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt_complex(Complex r) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", r.real(), r.imag());
  return buf;
}

void require_unbounded(const LaurentPoly& base, Complex r, const Torus& t,
                       const VerifyOptions& opt) {
  const RegionModel m = build_region(base, t[0], t[1], opt.region_angles, opt.region_raster);
  const PointClass c = classify_point(m, r);
  if (c.kind != PointClass::Unbounded) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%g, %g)", t[0], t[1]);
    throw PreconditionNotMet("r = " + fmt_complex(r) + " is " + to_string(c) +
                             ", not in the unbounded component, for the torus " + buf);
  }
}

double grid_max_modulus(const LaurentPoly& q, const Torus& t) {
  const int per_dim = q.n_vars() <= 3 ? 64 : 16;
  return modulus_range_on_torus(q, t, per_dim).second;
}

}  // namespace

RelationReport verify_main_relation(const LaurentPoly& base, Complex r, const Torus& t,
                                    double tol, const VerifyOptions& opt) {
  const int n = base.n_vars();
  if (t.dims() != n) throw UsageError("torus dimension does not match the polynomial");
  const Torus unit = Torus::unit(n);
  if (n == 2) {
    require_unbounded(base, r, t, opt);
    require_unbounded(base, r, unit, opt);
  } else {
    const double bound = std::max(grid_max_modulus(base, t), grid_max_modulus(base, unit));
    if (!(std::abs(r) > bound)) {
      throw PreconditionNotMet("|r| = " + std::to_string(std::abs(r)) +
                               " does not exceed the grid maximum " + std::to_string(bound) +
                               " of the base polynomial on both tori");
    }
  }
  const LaurentPoly p = family_member(base, r);
  RelationReport rep;
  rep.tol = tol;
  if (n == 2) {
    rep.lhs = mahler_jensen(p, t, opt.grid);
    rep.rhs_base = mahler_jensen(p, unit, opt.grid);
  } else {
    rep.lhs = mahler_direct(p, t, opt.grid);
    rep.rhs_base = mahler_direct(p, unit, opt.grid);
  }
  rep.nu_detail = nu_vector(p, t.radii, opt.winding_nodes);
  rep.rhs = rep.rhs_base.value;
  for (int j = 0; j < n; ++j) {
    rep.nu.push_back(rep.nu_detail[static_cast<std::size_t>(j)].nu);
    rep.rhs += rep.nu.back() * std::log(t[j]);
  }
  rep.discrepancy = std::abs(rep.lhs.value - rep.rhs);
  rep.pass = rep.discrepancy <= tol;
  return rep;
}

std::string to_string(CoefficientBranch b) {
  return b == CoefficientBranch::Leading ? "leading" : "constant";
}

BoundedValue bounded_component_value(const LaurentPoly& base, Complex r, const Torus& t,
                                     Role role, const VerifyOptions& opt, int probes) {
  if (base.n_vars() != 2 || t.dims() != 2) {
    throw UsageError("bounded_component_value needs two variables");
  }
  if (probes < 8) throw UsageError("bounded_component_value: at least 8 probes");
  const RegionModel model = build_region(base, t[0], t[1], opt.region_angles, opt.region_raster);
  const PointClass pc = classify_point(model, r);
  if (pc.kind != PointClass::Bounded) {
    throw PreconditionNotMet("r = " + fmt_complex(r) + " is " + to_string(pc) +
                             ", not in a bounded component");
  }
  const LaurentPoly p = family_member(base, r);
  const int var = role == Role::X ? 0 : 1;
  const int other = 1 - var;
  const double circle = t[var];
  const double along = t[other];
  const YFactorization f = factor_in_variable(p, var);

  int inside = 0, outside = 0;
  for (int k = 0; k < probes; ++k) {
    const Complex v = std::polar(along, 2 * kPi * k / probes);
    std::vector<Complex> c(static_cast<std::size_t>(f.degree) + 1);
    for (int j = 0; j <= f.degree; ++j) c[static_cast<std::size_t>(j)] = evaluate(f.coefficient(j), {v});
    if (c.back() == Complex{}) {
      throw MixedRoots("leading coefficient vanishes on the circle; the root census is undefined");
    }
    for (const auto& z : roots_complex(c)) {
      const double m = std::abs(z);
      if (m < circle * (1 - 1e-9)) {
        ++inside;
      } else if (m > circle * (1 + 1e-9)) {
        ++outside;
      } else {
        throw MixedRoots("a root lies within 1e-9 of the test circle");
      }
    }
    if (inside && outside) {
      throw MixedRoots("roots lie both inside and outside |" + to_string(role) + "| = " +
                       std::to_string(circle));
    }
  }
  BoundedValue out;
  out.role = role;
  if (outside == 0) {
    out.branch = CoefficientBranch::Leading;
    out.nu = f.degree - f.pole_order;
    out.coefficient_measure = mahler_univariate(f.leading, along);
  } else {
    out.branch = CoefficientBranch::Constant;
    out.nu = -f.pole_order;
    out.coefficient_measure = mahler_univariate(f.constant, along);
  }
  out.value = out.nu * std::log(circle) + out.coefficient_measure.value;
  return out;
}

SeriesCoeffs series_coefficients(const LaurentPoly& q, int N) {
  if (N < 0) throw UsageError("series length must be non-negative");
  SeriesCoeffs s;
  s.N = N;
  LaurentPoly pw = LaurentPoly::constant(q.n_vars(), 1.0);
  for (int n = 1; n <= N; ++n) {
    pw = pw * q;
    s.coeffs.push_back(constant_term(pw));
  }
  return s;
}

std::vector<GaussianRational> series_coefficients_exact(const LaurentPoly& q, int N) {
  if (N < 0) throw UsageError("series length must be non-negative");
  const ExactLaurentPoly qe = to_exact(q);
  ExactLaurentPoly pw = ExactLaurentPoly::constant(q.n_vars(), GaussianRational(1));
  std::vector<GaussianRational> out;
  for (int n = 1; n <= N; ++n) {
    pw = pw * qe;
    out.push_back(constant_term(pw));
  }
  return out;
}

Complex torus_coefficient(const LaurentPoly& q, int n, const Torus& t, int nodes_per_dim) {
  if (n < 0) throw UsageError("torus_coefficient: n must be non-negative");
  if (t.dims() != q.n_vars()) throw UsageError("torus dimension does not match the polynomial");
  const LaurentPoly s = rescale(q, t.radii);
  const int dims = q.n_vars();
  return periodic_mean_complex_nd(
      [&](std::span<const double> th) {
        std::array<Complex, kMaxVars> pt{};
        for (int k = 0; k < dims; ++k) pt[k] = std::polar(1.0, th[k]);
        return ipow(evaluate(s, std::span<const Complex>(pt.data(), th.size())), n);
      },
      GridSpec::uniform(dims, nodes_per_dim));
}

MeasureResult SeriesResult::as_measure() const {
  MeasureResult m;
  m.method = Method::Series;
  m.value = value.real();
  m.est_error = tail_bound;
  m.terms = terms;
  return m;
}

SeriesResult series_mtilde(const LaurentPoly& q, Complex r, int N) {
  if (constant_term(q) != Complex{}) {
    throw UsageError("series_mtilde: Q must have no constant term");
  }
  if (N < 0) throw UsageError("series_mtilde: N must be non-negative");
  if (r.imag() == 0 && r.real() <= 0) {
    throw PreconditionNotMet("series_mtilde: r lies on the branch cut (-inf, 0]");
  }
  SeriesResult s;
  s.terms = N;
  s.radius_bound = grid_max_modulus(q, Torus::unit(q.n_vars()));
  const double ar = std::abs(r);
  if (!(ar > s.radius_bound)) {
    throw DivergentSeries("|r| = " + std::to_string(ar) + " does not exceed the bound " +
                          std::to_string(s.radius_bound) + " on max |Q|");
  }
  s.coeffs = series_coefficients(q, N);
  Complex sum = 0;
  Complex rn = 1;
  for (int n = 1; n <= N; ++n) {
    rn *= r;
    sum += s.coeffs.coeffs[static_cast<std::size_t>(n - 1)] / (static_cast<double>(n) * rn);
  }
  s.value = std::log(r) - sum;
  const double ratio = s.radius_bound / ar;
  s.tail_bound = std::pow(ratio, N + 1) / ((N + 1) * (1 - ratio));
  return s;
}

double cassaigne_maillot(Complex a, Complex b, Complex c) {
  const double A = std::abs(a), B = std::abs(b), C = std::abs(c);
  if (A == 0 || B == 0 || C == 0) throw UsageError("cassaigne_maillot: coefficients must be nonzero");
  if (!(A < B + C && B < A + C && C < A + B)) return std::log(std::max({A, B, C}));
  auto angle = [](double opp, double s1, double s2) {
    return std::acos(std::clamp((s1 * s1 + s2 * s2 - opp * opp) / (2 * s1 * s2), -1.0, 1.0));
  };
  const double alpha = angle(A, B, C), beta = angle(B, A, C);
  const double gamma = kPi - alpha - beta;
  return (alpha * std::log(A) + beta * std::log(B) + gamma * std::log(C) +
          bloch_wigner(std::polar(A / B, gamma))) /
         kPi;
}

}  // namespace mahler
