#include "mahler/q4.hpp"

#include <cmath>
#include <numbers>

#include "mahler/errors.hpp"
#include "mahler/special.hpp"

namespace mahler {

namespace {

constexpr double kPi = std::numbers::pi;

double dilog_pair(double c, double mu) {
  const Complex ic{0.0, c};
  return bloch_wigner(ic * std::polar(1.0, -mu)) + bloch_wigner(ic * std::polar(1.0, mu));
}

}  // namespace

Q4Params q4_params_cd(double c, double d) {
  if (!(c > 0) || !(d > 0) || !std::isfinite(c) || !std::isfinite(d)) {
    throw UsageError("q4 parameters must be positive and finite");
  }
  Q4Params p;
  p.c = c;
  p.d = d;
  p.a = c / d;
  p.b = c * d;
  p.A = ((1 - d * d) / (1 + d * d)) * ((1 + c * c) / (2 * c));
  if (std::abs(p.A) < 1) p.mu = std::asin(p.A);
  return p;
}

Q4Params q4_params(double a, double b) {
  if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw UsageError("q4 radii must be positive and finite");
  }
  Q4Params p = q4_params_cd(std::sqrt(a * b), std::sqrt(b / a));
  p.a = a;
  p.b = b;
  return p;
}

LaurentPoly q4_polynomial() { return parse_poly("x + x^-1 + y + y^-1 + 4", 2); }

std::string to_string(Q4Branch b) { return b == Q4Branch::Logs ? "logs" : "dilog"; }

Q4Value q4_closed_detail(double a, double b) {
  Q4Value out;
  out.params = q4_params(a, b);
  const double c = out.params.c, d = out.params.d;
  if (!out.params.mu) {
    out.branch = Q4Branch::Logs;
    out.value = std::abs(std::log(c)) + std::abs(std::log(d));
    return out;
  }
  const double mu = *out.params.mu;
  out.branch = Q4Branch::Dilog;
  // cos(mu) > 0 here, so atan2 is the plain arctangent.
  out.value = (2 / kPi) * (dilog_pair(c, mu) - mu * std::log(d) +
                           std::log(c) * std::atan2(c - 1 / c, 2 * std::cos(mu)));
  return out;
}

double q4_closed(double a, double b) { return q4_closed_detail(a, b).value; }

double linear_factor_measure(double c, double d) {
  const Q4Params p = q4_params_cd(c, d);
  const double base = std::max(std::log(c), 0.0);
  if (p.A <= -1) return base + std::log(d);
  if (p.A >= 1) return base;
  const double mu = *p.mu;
  double arc = 0;
  if (c != 1) arc = std::log(c) * std::atan(2 * std::cos(mu) / (c - 1 / c));
  return base + (dilog_pair(c, mu) - arc + (kPi / 2 - mu) * std::log(d)) / kPi;
}

double ArcSplit::length() const {
  switch (kind) {
    case AllBelow: return 0;
    case AllAbove: return 2 * kPi;
    case Split: return end - start;
  }
  return 0;
}

std::string to_string(ArcSplit::Case c) {
  switch (c) {
    case ArcSplit::AllBelow: return "all_below";
    case ArcSplit::AllAbove: return "all_above";
    case ArcSplit::Split: return "split";
  }
  return "split";
}

ArcSplit arc_split(double c, double d) {
  const Q4Params p = q4_params_cd(c, d);
  ArcSplit s;
  s.A = p.A;
  if (p.A <= -1) {
    s.kind = ArcSplit::AllBelow;
  } else if (p.A >= 1) {
    s.kind = ArcSplit::AllAbove;
    s.start = -kPi;
    s.end = kPi;
  } else {
    s.kind = ArcSplit::Split;
    s.start = -kPi - *p.mu;
    s.end = *p.mu;
  }
  return s;
}

double arg_integral_closed(double c, double alpha, double beta) {
  if (!(c > 0)) throw UsageError("arg_integral_closed: c must be positive");
  if (c == 1) return 0;
  const double k = c - 1 / c;
  return std::atan(2 * std::cos(alpha) / k) - std::atan(2 * std::cos(beta) / k);
}

}  // namespace mahler
