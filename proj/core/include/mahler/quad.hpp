#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mahler {

struct GridSpec {
  std::vector<int> nodes_per_dim;
  int refinement_levels = 6;
  double singular_threshold = 1e-300;

  // 4096 nodes in 1-D, 1024^2 in 2-D, 128 per dimension from 3-D up.
  static GridSpec defaults(int dims);
  static GridSpec uniform(int dims, int n);

  int dims() const { return static_cast<int>(nodes_per_dim.size()); }
  std::int64_t total_nodes() const;
  // Throws UsageError unless every entry is a power of two >= 8.
  void validate() const;
};

struct QuadResult {
  double value = 0;
  double est_error = 0;
  std::int64_t nodes_used = 0;
  std::int64_t skipped_nodes = 0;
  std::int64_t refined_nodes = 0;
  bool low_confidence = false;
};

using AngleFunction1 = std::function<double(double)>;
using AngleFunctionN = std::function<double(std::span<const double>)>;
using ComplexAngleFunctionN = std::function<std::complex<double>(std::span<const double>)>;

// Average of f over [0, 2pi) by the trapezoid rule. Non-finite samples are
// treated as singular nodes: the node is replaced by the mean of the finite
// samples on a dyadic midpoint subgrid of its cell, or dropped (counted in
// skipped_nodes) if none is finite. More than 1% dropped nodes throws
// SingularityDominated.
QuadResult periodic_integral_1d(const AngleFunction1& f, const GridSpec& spec);

// Tensor-product version over [0, 2pi)^n, n = spec.dims().
QuadResult periodic_integral_nd(const AngleFunctionN& f, const GridSpec& spec);

// Average of log|g| with |g| below spec.singular_threshold treated as singular.
QuadResult log_modulus_average(const ComplexAngleFunctionN& g, const GridSpec& spec);

// Plain trapezoid mean of a complex integrand (no singular handling).
std::complex<double> periodic_mean_complex_nd(const ComplexAngleFunctionN& g,
                                              const GridSpec& spec);

}  // namespace mahler
