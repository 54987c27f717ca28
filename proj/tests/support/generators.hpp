#pragma once

#include "mahler/laurent.hpp"
#include "mahler/measure.hpp"
#include "oracles.hpp"

namespace gen {

// Sparse Laurent polynomial, exponents in [-span, span].
inline mahler::LaurentPoly random_poly(oracle::Rng& rng, int n_vars, int terms, int span) {
  std::vector<mahler::LaurentPoly::Term> t;
  for (int k = 0; k < terms; ++k) {
    mahler::Exponent e{};
    for (int i = 0; i < n_vars; ++i) e[i] = static_cast<std::int16_t>(rng.integer(-span, span));
    t.emplace_back(e, rng.complex_in_box(-2, 2));
  }
  return mahler::LaurentPoly::from_terms(n_vars, t);
}

// Exponents in [lo, hi] per variable, every coefficient slot filled.
inline mahler::LaurentPoly random_dense(oracle::Rng& rng, int n_vars, int lo, int hi) {
  std::vector<mahler::LaurentPoly::Term> t;
  mahler::Exponent e{};
  std::function<void(int)> rec = [&](int i) {
    if (i == n_vars) {
      t.emplace_back(e, rng.complex_in_box(-2, 2));
      return;
    }
    for (int k = lo; k <= hi; ++k) {
      e[i] = static_cast<std::int16_t>(k);
      rec(i + 1);
    }
  };
  rec(0);
  return mahler::LaurentPoly::from_terms(n_vars, t);
}

// Lower bound for min |p| on the torus: grid minimum minus a Lipschitz
// allowance for the half-cell between nodes.
inline double torus_min_lower_bound(const mahler::LaurentPoly& p, const mahler::Torus& t, int per_dim = 512) {
  const int n = p.n_vars();
  double slack = 0;
  for (int i = 0; i < n; ++i) {
    double lip = 0;
    for (const auto& [e, c] : p.terms()) {
      double mag = std::abs(c);
      for (int k = 0; k < n; ++k) mag *= std::pow(t[k], e[static_cast<std::size_t>(k)]);
      lip += std::abs(e[static_cast<std::size_t>(i)]) * mag;
    }
    slack += lip * oracle::kPi / per_dim;
  }
  return mahler::modulus_range_on_torus(p, t, per_dim).first - slack;
}

}  // namespace gen
