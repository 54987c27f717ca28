#include "mahler/region.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <numbers>

#include "mahler/errors.hpp"
#include "mahler/parallel.hpp"

namespace mahler {

namespace {

struct Raster {
  int res;
  double x0, h;
  std::vector<std::uint8_t> on;

  std::uint8_t& at(int i, int j) { return on[static_cast<std::size_t>(j) * res + i]; }
  double px(int i) const { return x0 + (i + 0.5) * h; }
  double to_grid(double v) const { return (v - x0) / h - 0.5; }

  void set(int i, int j) {
    if (i >= 0 && j >= 0 && i < res && j < res) at(i, j) = 1;
  }

  void segment(Complex p, Complex q) {
    double gx0 = to_grid(p.real()), gy0 = to_grid(p.imag());
    double gx1 = to_grid(q.real()), gy1 = to_grid(q.imag());
    int steps = static_cast<int>(std::ceil(std::max(std::abs(gx1 - gx0), std::abs(gy1 - gy0))));
    steps = std::max(steps, 1);
    for (int s = 0; s <= steps; ++s) {
      double t = static_cast<double>(s) / steps;
      set(static_cast<int>(std::lround(gx0 + t * (gx1 - gx0))),
          static_cast<int>(std::lround(gy0 + t * (gy1 - gy0))));
    }
  }

  void triangle(Complex p, Complex q, Complex r) {
    segment(p, q);
    segment(q, r);
    segment(r, p);
    const double det = (q.real() - p.real()) * (r.imag() - p.imag()) -
                       (r.real() - p.real()) * (q.imag() - p.imag());
    if (std::abs(det) < 1e-300) return;
    int i0 = std::max(0, static_cast<int>(std::floor(to_grid(std::min({p.real(), q.real(), r.real()})))));
    int i1 = std::min(res - 1, static_cast<int>(std::ceil(to_grid(std::max({p.real(), q.real(), r.real()})))));
    int j0 = std::max(0, static_cast<int>(std::floor(to_grid(std::min({p.imag(), q.imag(), r.imag()})))));
    int j1 = std::min(res - 1, static_cast<int>(std::ceil(to_grid(std::max({p.imag(), q.imag(), r.imag()})))));
    for (int j = j0; j <= j1; ++j) {
      const double y = px(j);
      for (int i = i0; i <= i1; ++i) {
        const double x = px(i);
        double l1 = ((q.real() - x) * (r.imag() - y) - (r.real() - x) * (q.imag() - y)) / det;
        double l2 = ((r.real() - x) * (p.imag() - y) - (p.real() - x) * (r.imag() - y)) / det;
        double l3 = 1 - l1 - l2;
        if (l1 >= 0 && l2 >= 0 && l3 >= 0) at(i, j) = 1;
      }
    }
  }
};

}  // namespace

Complex RegionModel::pixel_center(int i, int j) const {
  const double h = pixel_size();
  return {-half_width + (i + 0.5) * h, -half_width + (j + 0.5) * h};
}

bool RegionModel::locate(Complex r, int& i, int& j) const {
  const double h = pixel_size();
  double fi = std::floor((r.real() + half_width) / h);
  double fj = std::floor((r.imag() + half_width) / h);
  if (!(fi >= 0 && fj >= 0 && fi < raster_res && fj < raster_res)) return false;
  i = static_cast<int>(fi);
  j = static_cast<int>(fj);
  return true;
}

RegionModel build_region(const LaurentPoly& q, double a, double b, int n_angles, int raster_res) {
  if (q.n_vars() != 2) throw UsageError("build_region needs a two-variable polynomial");
  if (!(a > 0) || !(b > 0)) throw UsageError("build_region: radii must be positive");
  if (n_angles < 256) throw UsageError("build_region: n_angles must be at least 256");
  if (raster_res < 512) throw UsageError("build_region: raster resolution must be at least 512");

  RegionModel m;
  m.a = a;
  m.b = b;
  m.n_angles = n_angles;
  m.raster_res = raster_res;
  const int n = n_angles;
  m.samples.resize(static_cast<std::size_t>(n) * n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const Complex x = std::polar(a, 2 * std::numbers::pi * static_cast<double>(i) / n);
    for (int j = 0; j < n; ++j) {
      const Complex y = std::polar(b, 2 * std::numbers::pi * j / n);
      m.samples[i * n + static_cast<std::size_t>(j)] = evaluate(q, {x, y});
    }
  });
  for (const auto& s : m.samples) m.max_modulus = std::max(m.max_modulus, std::abs(s));
  m.half_width = 1.05 * m.max_modulus + 1.5;

  Raster ras{raster_res, -m.half_width, m.pixel_size(),
             std::vector<std::uint8_t>(static_cast<std::size_t>(raster_res) * raster_res, 0)};
  auto sample = [&](int i, int j) { return m.samples[static_cast<std::size_t>((i % n) * n + (j % n))]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex p00 = sample(i, j), p10 = sample(i + 1, j), p01 = sample(i, j + 1),
              p11 = sample(i + 1, j + 1);
      ras.triangle(p00, p10, p11);
      ras.triangle(p00, p11, p01);
    }
  }

  const int res = raster_res;
  std::vector<std::uint8_t> region = ras.on;
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      if (!ras.at(i, j)) continue;
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          int u = i + di, v = j + dj;
          if (u >= 0 && v >= 0 && u < res && v < res) region[static_cast<std::size_t>(v) * res + u] = 1;
        }
      }
    }
  }

  const std::size_t total = static_cast<std::size_t>(res) * res;
  m.labels.assign(total, std::numeric_limits<std::int32_t>::min());
  for (std::size_t k = 0; k < total; ++k) {
    if (region[k]) m.labels[k] = -1;
  }

  auto flood = [&](std::deque<std::size_t>& queue, std::int32_t label) {
    std::int64_t count = 0;
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      ++count;
      const int i = static_cast<int>(k % res), j = static_cast<int>(k / res);
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        int u = i + di[d], v = j + dj[d];
        if (u < 0 || v < 0 || u >= res || v >= res) continue;
        std::size_t kk = static_cast<std::size_t>(v) * res + u;
        if (m.labels[kk] == std::numeric_limits<std::int32_t>::min()) {
          m.labels[kk] = label;
          queue.push_back(kk);
        }
      }
    }
    return count;
  };

  std::deque<std::size_t> queue;
  for (int t = 0; t < res; ++t) {
    for (std::size_t k : {static_cast<std::size_t>(t), static_cast<std::size_t>(res - 1) * res + t,
                          static_cast<std::size_t>(t) * res, static_cast<std::size_t>(t) * res + res - 1}) {
      if (m.labels[k] == std::numeric_limits<std::int32_t>::min()) {
        m.labels[k] = 0;
        queue.push_back(k);
      }
    }
  }
  m.components.push_back({false, {}, flood(queue, 0), 0});
  for (std::size_t k = 0; k < total; ++k) {
    if (m.labels[k] != std::numeric_limits<std::int32_t>::min()) continue;
    const auto label = static_cast<std::int32_t>(m.components.size());
    m.labels[k] = label;
    queue.push_back(k);
    m.components.push_back({true, {}, flood(queue, label), 0});
  }

  // Chamfer (3-4) distance to the region, then the farthest pixel per component.
  std::vector<double> dist(total, std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < total; ++k) {
    if (m.labels[k] == -1) dist[k] = 0;
  }
  auto relax = [&](int i, int j, int u, int v, double w) {
    if (u < 0 || v < 0 || u >= res || v >= res) return;
    double& d = dist[static_cast<std::size_t>(j) * res + i];
    d = std::min(d, dist[static_cast<std::size_t>(v) * res + u] + w);
  };
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      relax(i, j, i - 1, j, 3);
      relax(i, j, i, j - 1, 3);
      relax(i, j, i - 1, j - 1, 4);
      relax(i, j, i + 1, j - 1, 4);
    }
  }
  for (int j = res - 1; j >= 0; --j) {
    for (int i = res - 1; i >= 0; --i) {
      relax(i, j, i + 1, j, 3);
      relax(i, j, i, j + 1, 3);
      relax(i, j, i + 1, j + 1, 4);
      relax(i, j, i - 1, j + 1, 4);
    }
  }
  std::vector<std::size_t> best(m.components.size(), total);
  for (std::size_t k = 0; k < total; ++k) {
    const std::int32_t l = m.labels[k];
    if (l < 0) continue;
    auto& bk = best[static_cast<std::size_t>(l)];
    if (bk == total || dist[k] > dist[bk]) bk = k;
  }
  for (std::size_t c = 0; c < m.components.size(); ++c) {
    if (best[c] == total) continue;
    const int i = static_cast<int>(best[c] % res), j = static_cast<int>(best[c] / res);
    m.components[c].representative = m.pixel_center(i, j);
    double d = dist[best[c]];
    m.components[c].clearance = std::isfinite(d) ? d / 3.0 * m.pixel_size() : m.half_width;
  }
  return m;
}

std::string to_string(const PointClass& c) {
  switch (c.kind) {
    case PointClass::InRegion: return "in_region";
    case PointClass::Unbounded: return "unbounded";
    case PointClass::Bounded: return "bounded";
  }
  return "unbounded";
}

PointClass classify_point(const RegionModel& model, Complex r) {
  int i = 0, j = 0;
  if (!model.locate(r, i, j)) return {PointClass::Unbounded, -1};
  const std::int32_t l = model.label_at(i, j);
  if (l < 0) return {PointClass::InRegion, -1};
  if (l == 0) return {PointClass::Unbounded, -1};
  return {PointClass::Bounded, l - 1};
}

FamilyExtremes family_extremes(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw UsageError("family_extremes: radii must be positive");
  const double ca = a + 1 / a, cb = b + 1 / b;
  return {ca + cb, std::abs(ca - cb), std::abs(a - 1 / a) + std::abs(b - 1 / b)};
}

EllipseConditions ellipse_conditions(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw UsageError("ellipse_conditions: radii must be positive");
  EllipseConditions e;
  const double x = std::abs(std::log(a)), y = std::abs(std::log(b));
  e.x = x;
  e.y = y;
  const double sx = std::sinh(x), sy = std::sinh(y), cx = std::cosh(x), cy = std::cosh(y);
  const double rhs = std::max(sx * sx, sy * sy);
  const double sh = std::sinh((x + y) / 2), ch = std::cosh((x + y) / 2);
  e.outer_ok = sh * sh * (1 + cx * cy) >= rhs;
  e.inner_defined = x != y;
  if (e.inner_defined) {
    const bool tanh_ok = std::min(std::abs(std::tanh(y) * cx), std::abs(std::tanh(x) * cy)) > 1;
    e.inner_ok = tanh_ok && ch * ch * (cx * cy - 1) >= rhs;
  }
  return e;
}

double Ellipse::level(Complex r) const {
  const double u = r.real() / semi_re, v = r.imag() / semi_im;
  return u * u + v * v;
}

double Ellipse::approx_distance(Complex r) const {
  const double g = level(r) - 1;
  const double gx = 2 * r.real() / (semi_re * semi_re), gy = 2 * r.imag() / (semi_im * semi_im);
  const double norm = std::hypot(gx, gy);
  if (norm == 0) return std::min(semi_re, semi_im);
  return std::abs(g) / norm;
}

Ellipse outer_ellipse(double a, double b) {
  const double x = std::abs(std::log(a)), y = std::abs(std::log(b));
  return {2 * (std::cosh(x) + std::cosh(y)), 2 * (std::sinh(x) + std::sinh(y))};
}

Ellipse inner_ellipse(double a, double b) {
  const double x = std::abs(std::log(a)), y = std::abs(std::log(b));
  return {2 * std::abs(std::cosh(x) - std::cosh(y)), 2 * std::abs(std::sinh(x) - std::sinh(y))};
}

std::string to_string(EllipseMembership m) {
  switch (m) {
    case EllipseMembership::InRegion: return "in_region";
    case EllipseMembership::Outside: return "outside";
    case EllipseMembership::Inside: return "inside";
    case EllipseMembership::Undecidable: return "undecidable";
  }
  return "undecidable";
}

EllipseMembership ellipse_membership(Complex r, double a, double b) {
  const auto cond = ellipse_conditions(a, b);
  if (!cond.outer_ok || !cond.inner_ok) return EllipseMembership::Undecidable;
  if (outer_ellipse(a, b).level(r) > 1) return EllipseMembership::Outside;
  if (inner_ellipse(a, b).level(r) < 1) return EllipseMembership::Inside;
  return EllipseMembership::InRegion;
}

std::string region_csv(const RegionModel& model) {
  std::string out = "re,im,label\n";
  out.reserve(out.size() + model.labels.size() * 24);
  char buf[96];
  for (int j = 0; j < model.raster_res; ++j) {
    for (int i = 0; i < model.raster_res; ++i) {
      Complex c = model.pixel_center(i, j);
      std::snprintf(buf, sizeof buf, "%.6g,%.6g,%d\n", c.real(), c.imag(), model.label_at(i, j));
      out += buf;
    }
  }
  return out;
}

}  // namespace mahler
