#include "mahler/winding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mahler/errors.hpp"
#include "mahler/measure.hpp"

namespace mahler {

std::string to_string(Role r) { return r == Role::X ? "x" : "y"; }

Role role_from_string(const std::string& s) {
  if (s == "x") return Role::X;
  if (s == "y") return Role::Y;
  throw UsageError("role must be 'x' or 'y', got '" + s + "'");
}

IndexCount index_in_disc(const LaurentPoly& p1, double radius, int n_nodes) {
  if (p1.n_vars() != 1) throw UsageError("index_in_disc needs a univariate polynomial");
  if (p1.is_zero()) throw UsageError("index_in_disc: zero polynomial");
  if (!(radius > 0)) throw UsageError("index_in_disc: radius must be positive");
  if (n_nodes < 8) throw UsageError("index_in_disc: need at least 8 nodes");
  const LaurentPoly dp = derivative(p1, 0);
  Complex sum = 0, comp = 0;
  double pmin = std::numeric_limits<double>::infinity(), pmax = 0;
  for (int k = 0; k < n_nodes; ++k) {
    const Complex z = std::polar(radius, 2 * std::numbers::pi * k / n_nodes);
    const Complex pv = evaluate(p1, {z});
    const double m = std::abs(pv);
    pmin = std::min(pmin, m);
    pmax = std::max(pmax, m);
    if (m == 0) continue;
    // Kahan on the running sum keeps the rounding well below the 0.1 gate.
    Complex term = z * evaluate(dp, {z}) / pv - comp;
    Complex t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }
  if (pmin < 1e-8 * pmax) {
    throw ZeroOnContour("polynomial vanishes (to 1e-8 relative) on |z| = " +
                        std::to_string(radius));
  }
  IndexCount out;
  out.raw = sum / static_cast<double>(n_nodes);
  out.nu = static_cast<int>(std::lround(out.raw.real()));
  out.residual = std::abs(out.raw - Complex(out.nu, 0));
  if (out.residual >= 0.1) {
    throw NonIntegral("winding value " + std::to_string(out.raw.real()) + "+" +
                      std::to_string(out.raw.imag()) + "i is not close to an integer");
  }
  return out;
}

std::pair<IndexCount, IndexCount> nu_pair(const LaurentPoly& p, double a, double b, int n_nodes) {
  if (p.n_vars() != 2) throw UsageError("nu_pair needs a two-variable polynomial");
  auto v = nu_vector(p, {a, b}, n_nodes);
  return {v[0], v[1]};
}

std::vector<IndexCount> nu_vector(const LaurentPoly& p, const std::vector<double>& radii,
                                  int n_nodes) {
  const int n = p.n_vars();
  if (static_cast<int>(radii.size()) != n) {
    throw UsageError("expected " + std::to_string(n) + " radii, got " +
                     std::to_string(radii.size()));
  }
  std::vector<Complex> pt(radii.begin(), radii.end());
  std::vector<IndexCount> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    out.push_back(index_in_disc(slice_all_but(p, j, pt), radii[static_cast<std::size_t>(j)],
                                n_nodes));
  }
  return out;
}

RhoReport rho_constancy(const LaurentPoly& p, double a, double b, int probes, Role role) {
  if (p.n_vars() != 2) throw UsageError("rho_constancy needs a two-variable polynomial");
  if (probes < 1) throw UsageError("rho_constancy: probes must be positive");
  const int var = role == Role::Y ? 1 : 0;
  const double along = role == Role::Y ? a : b;
  const double inside = role == Role::Y ? b : a;
  RhoReport rep;
  rep.role = role;
  rep.counts.assign(static_cast<std::size_t>(probes), -1);

  if (!p.depends_on(var)) {
    // No roots in that variable at all.
    std::fill(rep.counts.begin(), rep.counts.end(), 0);
    rep.constant = true;
    rep.count = 0;
    return rep;
  }
  // Dense coefficients rather than factor_in_variable, so y^k f(x) with k < 0
  // is allowed.
  for (int k = 0; k < probes; ++k) {
    const double theta = 2 * std::numbers::pi * k / probes;
    std::vector<Complex> pt(2);
    pt[static_cast<std::size_t>(1 - var)] = std::polar(along, theta);
    pt[static_cast<std::size_t>(var)] = 1.0;
    try {
      LaurentPoly s = slice_all_but(p, var, pt);
      int shift = 0;
      auto c = dense_coefficients(s, shift);
      double scale = 0;
      for (const auto& v : c) scale = std::max(scale, std::abs(v));
      if (std::abs(c.back()) <= 1e-14 * scale) {
        rep.flagged.push_back(k);
        continue;
      }
      int count = 0;
      if (c.size() > 1) {
        for (const auto& z : roots_complex(c)) count += std::abs(z) < inside ? 1 : 0;
      }
      // Zero roots from a positive minimum exponent.
      if (shift < 0) count += -shift;
      rep.counts[static_cast<std::size_t>(k)] = count;
    } catch (const NumericalFailure&) {
      rep.flagged.push_back(k);
    }
  }
  rep.constant = true;
  for (int c : rep.counts) {
    if (c < 0) continue;
    if (rep.count < 0) {
      rep.count = c;
    } else if (c != rep.count) {
      rep.constant = false;
    }
  }
  if (rep.count < 0) rep.constant = false;
  return rep;
}

}  // namespace mahler
