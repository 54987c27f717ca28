#pragma once

#include <complex>
#include <numbers>

namespace mahler {

template <class T>
struct DilogValue {
  T value{};
  double est_error = 0;
};

// Argument in [-pi, pi).
double arg_principal(std::complex<double> z);

// Principal-branch dilogarithm. li2(1) is pi^2/6 exactly.
std::complex<double> li2(std::complex<double> z);
DilogValue<std::complex<double>> li2_with_error(std::complex<double> z);

// Bloch-Wigner dilogarithm D(z) = Im Li2(z) + arg(1 - z) log|z|.
// Zero on the real line, at 0, 1 and for non-finite input.
double bloch_wigner(std::complex<double> z);
DilogValue<double> bloch_wigner_with_error(std::complex<double> z);

inline constexpr double kCatalan = 0.91596559417721901505;

}  // namespace mahler
