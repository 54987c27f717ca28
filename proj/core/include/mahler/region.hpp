#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mahler/laurent.hpp"

namespace mahler {

struct RegionComponent {
  bool bounded = false;
  Complex representative;
  std::int64_t pixels = 0;
  double clearance = 0;  // distance from the representative to the region
};

// Rasterized image q(T^2_{a,b}) over the square [-half_width, half_width]^2.
// Label per pixel: -1 region, 0 unbounded complement, k >= 1 bounded
// component k - 1.
struct RegionModel {
  double a = 1, b = 1;
  int n_angles = 0;
  int raster_res = 0;
  double half_width = 0;
  double max_modulus = 0;
  std::vector<Complex> samples;
  std::vector<std::int32_t> labels;  // row-major, index = j * raster_res + i
  std::vector<RegionComponent> components;  // [0] is the unbounded one

  double pixel_size() const { return 2 * half_width / raster_res; }
  Complex pixel_center(int i, int j) const;
  // Pixel containing r, or false when r lies outside the box.
  bool locate(Complex r, int& i, int& j) const;
  std::int32_t label_at(int i, int j) const { return labels[static_cast<std::size_t>(j) * raster_res + i]; }
  int bounded_count() const { return static_cast<int>(components.size()) - 1; }
};

RegionModel build_region(const LaurentPoly& q, double a, double b, int n_angles = 256,
                         int raster_res = 1024);

struct PointClass {
  enum Kind { InRegion, Unbounded, Bounded } kind = Unbounded;
  int index = -1;  // bounded component index
};
std::string to_string(const PointClass& c);

PointClass classify_point(const RegionModel& model, Complex r);

// Closed-form extremes of the image of x + 1/x + y + 1/y on T^2_{a,b}.
struct FamilyExtremes {
  double r_max = 0;
  double r_min = 0;
  double im_max = 0;
};
FamilyExtremes family_extremes(double a, double b);

// Boundary predicates in x = |log a|, y = |log b| (the region is unchanged
// by a -> 1/a and b -> 1/b). inner_defined is false when a = b or 1/b.
struct EllipseConditions {
  bool outer_ok = false;
  bool inner_ok = false;
  bool inner_defined = true;
  double x = 0, y = 0;
};
EllipseConditions ellipse_conditions(double a, double b);

struct Ellipse {
  double semi_re = 0;
  double semi_im = 0;
  // Value of re^2/A^2 + im^2/B^2; 1 on the ellipse.
  double level(Complex r) const;
  // First-order distance from r to the ellipse.
  double approx_distance(Complex r) const;
};
Ellipse outer_ellipse(double a, double b);
Ellipse inner_ellipse(double a, double b);

enum class EllipseMembership { InRegion, Outside, Inside, Undecidable };
std::string to_string(EllipseMembership m);
EllipseMembership ellipse_membership(Complex r, double a, double b);

// CSV rows "re,im,label" for every pixel.
std::string region_csv(const RegionModel& model);

}  // namespace mahler
