#include <algorithm>
#include <cmath>
#include <numbers>

#include "mahler/errors.hpp"
#include "mahler/measure.hpp"
#include "mahler/special.hpp"

namespace mahler {

namespace {

constexpr int kMaxSweeps = 200;

void horner(std::span<const Complex> c, Complex z, Complex& p, Complex& dp) {
  p = c.back();
  dp = 0;
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[j];
  }
}

double scale_at(std::span<const Complex> c, double r) {
  double s = 0;
  for (std::size_t j = c.size(); j-- > 0;) s = s * r + std::abs(c[j]);
  return s;
}

double sort_arg(Complex z) {
  double m = std::abs(z);
  if (std::abs(z.imag()) <= 1e-14 * m) z = {z.real(), 0.0};
  return arg_principal(z);
}

}  // namespace

std::vector<Complex> roots_complex(std::span<const Complex> coeffs_in, double tol) {
  std::vector<Complex> c(coeffs_in.begin(), coeffs_in.end());
  while (!c.empty() && c.back() == Complex{}) c.pop_back();
  if (c.size() < 2) throw UsageError("roots_complex: polynomial must have degree >= 1");
  for (const auto& v : c) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalFailure("roots_complex: non-finite coefficient");
    }
  }

  std::vector<Complex> roots;
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == Complex{}) ++zeros;
  roots.assign(zeros, Complex{});
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const std::size_t n = c.size() - 1;

  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
  } else if (n > 1) {
    const double radius = std::pow(std::abs(c[0]) / std::abs(c[n]), 1.0 / static_cast<double>(n));
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
      double ang = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
      z[k] = std::polar(radius, ang);
    }
    std::vector<bool> done(n, false);
    std::vector<double> resid(n, 0);
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
      bool all = true;
      for (std::size_t k = 0; k < n; ++k) {
        Complex p, dp;
        horner(c, z[k], p, dp);
        resid[k] = std::abs(p) / scale_at(c, std::abs(z[k]));
        if (resid[k] <= tol) {
          done[k] = true;
          continue;
        }
        done[k] = false;
        all = false;
        Complex ratio = p / dp;
        Complex s = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k) s += 1.0 / (z[k] - z[j]);
        }
        Complex w = ratio / (1.0 - ratio * s);
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
        if (std::isfinite(w.real()) && std::isfinite(w.imag())) z[k] -= w;
      }
      if (all) break;
    }
    if (sweep == kMaxSweeps) {
      throw NumericalFailure("roots_complex: no convergence after 200 sweeps", resid);
    }
    for (auto& r : z) {
      Complex p, dp;
      horner(c, r, p, dp);
      if (dp == Complex{}) continue;
      Complex cand = r - p / dp;
      Complex pc, dpc;
      horner(c, cand, pc, dpc);
      if (std::isfinite(cand.real()) && std::isfinite(cand.imag()) && std::abs(pc) < std::abs(p)) {
        r = cand;
      }
    }
    roots.insert(roots.end(), z.begin(), z.end());
  }

  std::stable_sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    double aa = sort_arg(a), ab = sort_arg(b);
    if (aa != ab) return aa < ab;
    return std::abs(a) < std::abs(b);
  });
  return roots;
}

}  // namespace mahler
