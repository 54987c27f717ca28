#pragma once

#include <optional>
#include <string>

#include "mahler/laurent.hpp"

namespace mahler {

struct Q4Params {
  double a = 1, b = 1;
  double c = 1;  // sqrt(ab)
  double d = 1;  // sqrt(b/a)
  double A = 0;  // ((1 - d^2)/(1 + d^2)) (1 + c^2)/(2c)
  std::optional<double> mu;  // arcsin A when |A| < 1
};

Q4Params q4_params(double a, double b);

// Parameters from (c, d) directly; a = c/d, b = cd.
Q4Params q4_params_cd(double c, double d);

// x + 1/x + y + 1/y + 4.
LaurentPoly q4_polynomial();

enum class Q4Branch { Logs, Dilog };
std::string to_string(Q4Branch b);

struct Q4Value {
  double value = 0;
  Q4Branch branch = Q4Branch::Logs;
  Q4Params params;
};

// m_{a,b}(x + 1/x + y + 1/y + 4) in closed form.
Q4Value q4_closed_detail(double a, double b);
double q4_closed(double a, double b);

// m_{c,d}(1 + iw + iz + wz).
double linear_factor_measure(double c, double d);

// The arc of |w| = c on which |z(w)| > d, as the angle interval
// [start, end] with start = -pi - mu, end = mu.
struct ArcSplit {
  enum Case { AllBelow, AllAbove, Split } kind = Split;
  double A = 0;
  double start = 0;
  double end = 0;
  double length() const;
};
std::string to_string(ArcSplit::Case c);

ArcSplit arc_split(double c, double d);

// Change of arg((1 + iw)/(1 - iw)) along w = c e^{i psi}, psi from alpha to
// beta: arctan(2 cos alpha / k) - arctan(2 cos beta / k), k = c - 1/c.
// Zero when c = 1.
double arg_integral_closed(double c, double alpha, double beta);

}  // namespace mahler
