#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "mahler/laurent.hpp"

namespace mahler {

struct IndexCount {
  int nu = 0;
  Complex raw;
  double residual = 0;
};

enum class Role { X, Y };
std::string to_string(Role r);
Role role_from_string(const std::string& s);

// (1/2 pi i) times the contour integral of p'/p over |z| = radius, i.e. zeros
// inside minus the pole order at 0. Throws ZeroOnContour when min |p| on the
// nodes is below 1e-8 max |p|, NonIntegral when the raw value is 0.1 or more
// away from an integer.
IndexCount index_in_disc(const LaurentPoly& p1, double radius, int n_nodes = 4096);

// nu^1 counts in |x| < a on the slice y = b, nu^2 in |y| < b on x = a.
std::pair<IndexCount, IndexCount> nu_pair(const LaurentPoly& p, double a, double b,
                                          int n_nodes = 4096);

// nu^j for every variable: slice all other variables at their radii.
std::vector<IndexCount> nu_vector(const LaurentPoly& p, const std::vector<double>& radii,
                                  int n_nodes = 4096);

struct RhoReport {
  Role role = Role::Y;
  std::vector<int> counts;   // -1 for flagged probes
  std::vector<int> flagged;  // probe indices excluded from the comparison
  bool constant = false;
  int count = -1;            // the common count when constant
};

// Role Y: for x at `probes` equally spaced points of |x| = a, the number of
// roots of p(x, .) in |y| < b. Role X swaps the variables.
RhoReport rho_constancy(const LaurentPoly& p, double a, double b, int probes,
                        Role role = Role::Y);

}  // namespace mahler
