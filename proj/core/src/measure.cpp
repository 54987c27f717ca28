#include "mahler/measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "mahler/errors.hpp"

namespace mahler {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Scaled copy of p whose unit-torus values are p's values on t.
LaurentPoly to_unit_torus(const LaurentPoly& p, const Torus& t) {
  if (t.dims() != p.n_vars()) {
    throw UsageError("torus has " + std::to_string(t.dims()) + " radii, polynomial has " +
                     std::to_string(p.n_vars()) + " variables");
  }
  return rescale(p, t.radii);
}

constexpr double kRoundoffZero = 1e-13;

Complex eval_on_unit_torus(const LaurentPoly& q, std::span<const double> angles) {
  std::array<Complex, kMaxVars> pt{};
  for (std::size_t k = 0; k < angles.size(); ++k) pt[k] = std::polar(1.0, angles[k]);
  return evaluate(q, std::span<const Complex>(pt.data(), angles.size()));
}

}  // namespace

Torus::Torus(std::vector<double> r) : radii(std::move(r)) {
  if (radii.empty()) throw UsageError("torus needs at least one radius");
  for (double v : radii) {
    if (!(v > 0) || !std::isfinite(v)) {
      throw UsageError("torus radii must be positive and finite");
    }
  }
}

bool Torus::is_unit() const {
  return std::all_of(radii.begin(), radii.end(), [](double v) { return v == 1.0; });
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::Jensen: return "jensen";
    case Method::Series: return "series";
    case Method::ClosedForm: return "closed_form";
  }
  return "direct";
}

Method method_from_string(const std::string& s) {
  if (s == "direct") return Method::Direct;
  if (s == "jensen") return Method::Jensen;
  if (s == "series") return Method::Series;
  if (s == "closed_form") return Method::ClosedForm;
  throw UsageError("unknown method '" + s + "'");
}

double jensen_circle(Complex z0, double radius) {
  if (!(radius > 0)) throw UsageError("jensen_circle: radius must be positive");
  return std::log(std::max(std::abs(z0), radius));
}

std::vector<Complex> dense_coefficients(const LaurentPoly& p1, int& pole_order) {
  if (p1.n_vars() != 1) throw UsageError("expected a univariate polynomial");
  if (p1.is_zero()) throw UsageError("zero polynomial");
  const int lo = p1.min_exponent(0);
  const int hi = p1.max_exponent(0);
  pole_order = -lo;
  std::vector<Complex> c(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, v] : p1.terms()) c[static_cast<std::size_t>(e[0] - lo)] = v;
  return c;
}

MeasureResult mahler_univariate(const LaurentPoly& p1, double radius) {
  if (!(radius > 0)) throw UsageError("radius must be positive");
  int shift = 0;
  auto c = dense_coefficients(p1, shift);
  MeasureResult r;
  r.method = Method::Jensen;
  double v = -shift * std::log(radius) + std::log(std::abs(c.back()));
  if (c.size() > 1) {
    for (const auto& z : roots_complex(c)) v += jensen_circle(z, radius);
  }
  r.value = v;
  r.est_error = 1e-12 * (1 + std::abs(v));
  return r;
}

MeasureResult mahler_direct(const LaurentPoly& p, const Torus& t, std::optional<GridSpec> spec) {
  if (p.is_zero()) throw UsageError("Mahler measure of the zero polynomial is undefined");
  const LaurentPoly q = to_unit_torus(p, t);
  GridSpec g = spec.value_or(GridSpec::defaults(p.n_vars()));
  if (g.dims() != p.n_vars()) throw UsageError("grid dimension does not match polynomial");
  MeasureResult r;
  r.method = Method::Direct;
  if (q.size() == 1) {
    // Monomial: |p| is constant on the torus.
    r.value = std::log(std::abs(q.terms().front().second));
    r.quad = QuadResult{r.value, 0, 0, 0, 0, false};
    return r;
  }
  // Nodes where |p| is at round-off level relative to its terms are treated
  // as zeros of p, like values below the absolute threshold.
  // On the unit torus every monomial has modulus 1, so sum |c| is the scale.
  double scale = 0;
  for (const auto& t : q.terms()) scale += std::abs(t.second);
  const double thr = g.singular_threshold;
  QuadResult qr = periodic_integral_nd(
      [&q, thr, scale](std::span<const double> th) {
        const double m = std::abs(eval_on_unit_torus(q, th));
        if (!(m > thr) || m <= kRoundoffZero * scale || !std::isfinite(m)) {
          return std::numeric_limits<double>::quiet_NaN();
        }
        return std::log(m);
      },
      g);
  r.value = qr.value;
  r.est_error = qr.est_error;
  r.quad = qr;
  return r;
}

RootSlice root_slice(const YFactorization& f, double a, double theta) {
  RootSlice s;
  s.at_angle = theta;
  const Complex x = std::polar(a, theta);
  std::vector<Complex> c(static_cast<std::size_t>(f.degree) + 1);
  for (int j = 0; j <= f.degree; ++j) c[static_cast<std::size_t>(j)] = evaluate(f.coefficient(j), {x});
  s.leading_abs = std::abs(c.back());
  double scale = 0;
  for (const auto& v : c) scale = std::max(scale, std::abs(v));
  while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * scale) {
    c.pop_back();
    ++s.degree_drop;
  }
  if (c.size() > 1) s.roots = roots_complex(c);
  return s;
}

MeasureResult mahler_jensen(const LaurentPoly& p, const Torus& t, std::optional<GridSpec> spec) {
  if (p.n_vars() != 2) throw UsageError("mahler_jensen needs a two-variable polynomial");
  if (t.dims() != 2) throw UsageError("mahler_jensen needs a two-dimensional torus");
  if (p.is_zero()) throw UsageError("Mahler measure of the zero polynomial is undefined");
  GridSpec g = spec.value_or(GridSpec::defaults(1));
  if (g.dims() != 1) throw UsageError("mahler_jensen uses a 1-D grid");
  const double a = t[0], b = t[1];
  const double log_b = std::log(b);
  MeasureResult r;
  r.method = Method::Jensen;

  const int lo = p.min_exponent(1), hi = p.max_exponent(1);
  if (lo == hi) {
    // p = y^k f(x).
    std::vector<LaurentPoly::Term> terms;
    for (const auto& [e, c] : p.terms()) {
      Exponent f{};
      f[0] = e[0];
      terms.emplace_back(f, c);
    }
    LaurentPoly fx = LaurentPoly::from_terms(1, std::move(terms));
    MeasureResult inner = mahler_univariate(fx, a);
    r.value = lo * log_b + inner.value;
    r.est_error = inner.est_error;
    return r;
  }

  const YFactorization f = factor_in_variable(p, 1);
  const double thr = g.singular_threshold;
  QuadResult qr = periodic_integral_1d(
      [&](double theta) {
        const Complex x = std::polar(a, theta);
        std::vector<Complex> c(static_cast<std::size_t>(f.degree) + 1);
        double scale = 0;
        for (int j = 0; j <= f.degree; ++j) {
          c[static_cast<std::size_t>(j)] = evaluate(f.coefficient(j), {x});
          scale = std::max(scale, std::abs(c[static_cast<std::size_t>(j)]));
        }
        const double lead = std::abs(c.back());
        if (!(lead > thr) || lead <= 1e-14 * scale) return std::numeric_limits<double>::quiet_NaN();
        double v = std::log(lead);
        for (const auto& y : roots_complex(c)) v += jensen_circle(y, b);
        return v;
      },
      g);
  r.value = -f.pole_order * log_b + qr.value;
  r.est_error = qr.est_error;
  r.quad = qr;
  return r;
}

std::pair<double, double> modulus_range_on_torus(const LaurentPoly& p, const Torus& t,
                                                 int per_dim) {
  const LaurentPoly q = to_unit_torus(p, t);
  const int n = p.n_vars();
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<double> th(static_cast<std::size_t>(n), 0.0);
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (;;) {
    for (int k = 0; k < n; ++k) th[k] = kTwoPi * idx[k] / per_dim;
    double m = std::abs(eval_on_unit_torus(q, th));
    lo = std::min(lo, m);
    hi = std::max(hi, m);
    int k = n - 1;
    for (; k >= 0; --k) {
      if (++idx[k] < per_dim) break;
      idx[k] = 0;
    }
    if (k < 0) break;
  }
  return {lo, hi};
}

}  // namespace mahler
