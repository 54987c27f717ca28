#include "mahler/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mahler/errors.hpp"
#include "mahler/parallel.hpp"

namespace mahler {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

struct Neumaier {
  double s = 0, c = 0;
  void add(double v) {
    double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }
  double value() const { return s + c; }
};

struct RowSums {
  double fine = 0;
  double coarse = 0;
  std::int64_t skipped = 0;
  std::int64_t refined = 0;
};

double pairwise_sum(std::span<const double> v) {
  if (v.empty()) return 0;
  if (v.size() == 1) return v[0];
  std::size_t mid = v.size() / 2;
  return pairwise_sum(v.subspan(0, mid)) + pairwise_sum(v.subspan(mid));
}

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Mean of the finite samples of f on a midpoint subgrid of the cell around
// `center`; NaN if none is finite.
double refine_cell(const AngleFunctionN& f, std::span<const double> center,
                   std::span<const double> widths, int levels) {
  const int n = static_cast<int>(center.size());
  const int per_dim = 1 << levels;
  std::int64_t total = 1;
  for (int k = 0; k < n; ++k) total *= per_dim;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<double> pt(center.begin(), center.end());
  Neumaier acc;
  std::int64_t finite = 0;
  for (std::int64_t s = 0; s < total; ++s) {
    for (int k = 0; k < n; ++k) {
      pt[k] = center[k] + ((idx[k] + 0.5) / per_dim - 0.5) * widths[k];
    }
    double v = f(pt);
    if (std::isfinite(v)) {
      acc.add(v);
      ++finite;
    }
    for (int k = n - 1; k >= 0; --k) {
      if (++idx[k] < per_dim) break;
      idx[k] = 0;
    }
  }
  if (finite == 0) return std::numeric_limits<double>::quiet_NaN();
  return acc.value() / static_cast<double>(finite);
}

}  // namespace

GridSpec GridSpec::defaults(int dims) {
  if (dims < 1) throw UsageError("GridSpec: dimension must be positive");
  int n = dims == 1 ? 4096 : dims == 2 ? 1024 : 128;
  return uniform(dims, n);
}

GridSpec GridSpec::uniform(int dims, int n) {
  GridSpec g;
  g.nodes_per_dim.assign(static_cast<std::size_t>(dims), n);
  return g;
}

std::int64_t GridSpec::total_nodes() const {
  std::int64_t t = 1;
  for (int n : nodes_per_dim) t *= n;
  return t;
}

void GridSpec::validate() const {
  if (nodes_per_dim.empty()) throw UsageError("GridSpec: no dimensions");
  for (int n : nodes_per_dim) {
    if (n < 8 || !is_pow2(n)) {
      throw UsageError("GridSpec: nodes per dimension must be a power of two >= 8, got " +
                       std::to_string(n));
    }
  }
  if (refinement_levels < 0) throw UsageError("GridSpec: refinement_levels must be >= 0");
  if (!(singular_threshold > 0)) throw UsageError("GridSpec: singular_threshold must be > 0");
}

QuadResult periodic_integral_nd(const AngleFunctionN& f, const GridSpec& spec) {
  spec.validate();
  const int n = spec.dims();
  const auto& dims = spec.nodes_per_dim;
  std::vector<double> widths(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) widths[k] = kTwoPi / dims[k];
  const int levels = std::min(spec.refinement_levels, std::max(1, 12 / n));

  std::int64_t inner = 1;
  for (int k = 1; k < n; ++k) inner *= dims[k];

  std::vector<RowSums> rows(static_cast<std::size_t>(dims[0]));
  parallel_for(rows.size(), [&](std::size_t i0) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    idx[0] = static_cast<int>(i0);
    std::vector<double> pt(static_cast<std::size_t>(n));
    pt[0] = widths[0] * static_cast<double>(i0);
    Neumaier fine, coarse;
    RowSums& out = rows[i0];
    for (std::int64_t s = 0; s < inner; ++s) {
      bool even = true;
      for (int k = 0; k < n; ++k) {
        pt[k] = widths[k] * idx[k];
        even = even && (idx[k] % 2 == 0);
      }
      double v = f(pt);
      if (!std::isfinite(v)) {
        ++out.refined;
        v = spec.refinement_levels > 0 ? refine_cell(f, pt, widths, levels)
                                       : std::numeric_limits<double>::quiet_NaN();
        if (!std::isfinite(v)) {
          ++out.skipped;
          v = 0;
        }
      }
      fine.add(v);
      if (even) coarse.add(v);
      for (int k = n - 1; k >= 1; --k) {
        if (++idx[k] < dims[k]) break;
        idx[k] = 0;
      }
    }
    out.fine = fine.value();
    out.coarse = coarse.value();
  });

  std::vector<double> fine(rows.size()), coarse(rows.size());
  QuadResult r;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    fine[i] = rows[i].fine;
    coarse[i] = rows[i].coarse;
    r.skipped_nodes += rows[i].skipped;
    r.refined_nodes += rows[i].refined;
  }
  const std::int64_t total = spec.total_nodes();
  const double coarse_count = static_cast<double>(total) / std::ldexp(1.0, n);
  r.nodes_used = total;
  r.value = pairwise_sum(fine) / static_cast<double>(total);
  const double coarse_value = pairwise_sum(coarse) / coarse_count;
  r.est_error = std::abs(r.value - coarse_value);
  r.low_confidence = r.skipped_nodes > 0;
  if (static_cast<double>(r.skipped_nodes) > 0.01 * static_cast<double>(total)) {
    throw SingularityDominated("quadrature: " + std::to_string(r.skipped_nodes) + " of " +
                               std::to_string(total) + " nodes are singular after refinement");
  }
  return r;
}

QuadResult periodic_integral_1d(const AngleFunction1& f, const GridSpec& spec) {
  if (spec.dims() != 1) throw UsageError("periodic_integral_1d: GridSpec must be 1-D");
  return periodic_integral_nd([&f](std::span<const double> t) { return f(t[0]); }, spec);
}

QuadResult log_modulus_average(const ComplexAngleFunctionN& g, const GridSpec& spec) {
  const double thr = spec.singular_threshold;
  return periodic_integral_nd(
      [&g, thr](std::span<const double> t) {
        double m = std::abs(g(t));
        if (!(m >= thr) || !std::isfinite(m)) return std::numeric_limits<double>::quiet_NaN();
        return std::log(m);
      },
      spec);
}

std::complex<double> periodic_mean_complex_nd(const ComplexAngleFunctionN& g,
                                              const GridSpec& spec) {
  spec.validate();
  const int n = spec.dims();
  const auto& dims = spec.nodes_per_dim;
  std::int64_t inner = 1;
  for (int k = 1; k < n; ++k) inner *= dims[k];
  std::vector<double> re(static_cast<std::size_t>(dims[0])), im(re.size());
  parallel_for(re.size(), [&](std::size_t i0) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    idx[0] = static_cast<int>(i0);
    std::vector<double> pt(static_cast<std::size_t>(n));
    Neumaier sr, si;
    for (std::int64_t s = 0; s < inner; ++s) {
      for (int k = 0; k < n; ++k) pt[k] = kTwoPi * idx[k] / dims[k];
      auto v = g(pt);
      sr.add(v.real());
      si.add(v.imag());
      for (int k = n - 1; k >= 1; --k) {
        if (++idx[k] < dims[k]) break;
        idx[k] = 0;
      }
    }
    re[i0] = sr.value();
    im[i0] = si.value();
  });
  const double total = static_cast<double>(spec.total_nodes());
  return {pairwise_sum(re) / total, pairwise_sum(im) / total};
}

}  // namespace mahler
