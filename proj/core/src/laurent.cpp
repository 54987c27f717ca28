#include "mahler/laurent.hpp"

#include <cmath>
#include <limits>

#include "mahler/exact.hpp"

namespace mahler {

namespace {

// Neumaier summation on both components of a complex accumulator.
struct CompensatedSum {
  double re = 0, im = 0, cre = 0, cim = 0;

  static void add1(double& s, double& c, double v) {
    double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }
  void add(Complex v) {
    add1(re, cre, v.real());
    add1(im, cim, v.imag());
  }
  Complex value() const { return {re + cre, im + cim}; }
};

Exponent drop_slot(const Exponent& e, int var, int n) {
  Exponent out{};
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (i != var) out[k++] = e[i];
  }
  return out;
}

int remaining_vars(int n) { return n > 1 ? n - 1 : 1; }

}  // namespace

Complex ipow(Complex z, int n) {
  if (n == 0) return {1.0, 0.0};
  bool invert = n < 0;
  unsigned m = invert ? static_cast<unsigned>(-(long)n) : static_cast<unsigned>(n);
  Complex result{1.0, 0.0};
  Complex base = z;
  while (m) {
    if (m & 1u) result *= base;
    m >>= 1u;
    if (m) base *= base;
  }
  return invert ? Complex{1.0, 0.0} / result : result;
}

Complex evaluate(const LaurentPoly& p, std::span<const Complex> point) {
  const int n = p.n_vars();
  if (static_cast<int>(point.size()) != n) {
    throw UsageError("evaluate: point has " + std::to_string(point.size()) +
                     " coordinates, polynomial has " + std::to_string(n) + " variables");
  }
  CompensatedSum acc;
  for (const auto& [e, c] : p.terms()) {
    Complex t = c;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (point[i] == Complex{} && e[i] < 0) {
        throw DomainError("evaluate: zero coordinate for variable " + std::to_string(i) +
                          " with a negative exponent");
      }
      t *= ipow(point[i], e[i]);
    }
    acc.add(t);
  }
  return acc.value();
}

LaurentPoly derivative(const LaurentPoly& p, int var) {
  if (var < 0 || var >= p.n_vars()) throw UsageError("derivative: variable index out of range");
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] = detail::checked_exponent(long{e[var]} - 1);
    out.emplace_back(f, c * static_cast<double>(e[var]));
  }
  return LaurentPoly::from_terms(p.n_vars(), std::move(out));
}

LaurentPoly slice(const LaurentPoly& p, int var, Complex value) {
  const int n = p.n_vars();
  if (n < 2) throw UsageError("slice: need at least two variables");
  if (var < 0 || var >= n) throw UsageError("slice: variable index out of range");
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (value == Complex{} && e[var] < 0) {
      throw DomainError("slice: zero value for a variable with a negative exponent");
    }
    out.emplace_back(drop_slot(e, var, n), c * ipow(value, e[var]));
  }
  return LaurentPoly::from_terms(n - 1, std::move(out));
}

LaurentPoly slice_all_but(const LaurentPoly& p, int keep, std::span<const Complex> values) {
  const int n = p.n_vars();
  if (keep < 0 || keep >= n) throw UsageError("slice_all_but: variable index out of range");
  if (static_cast<int>(values.size()) != n) {
    throw UsageError("slice_all_but: expected one value per variable");
  }
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    Complex t = c;
    for (int i = 0; i < n; ++i) {
      if (i == keep || e[i] == 0) continue;
      if (values[i] == Complex{} && e[i] < 0) {
        throw DomainError("slice_all_but: zero value with a negative exponent");
      }
      t *= ipow(values[i], e[i]);
    }
    Exponent f{};
    f[0] = e[keep];
    out.emplace_back(f, t);
  }
  return LaurentPoly::from_terms(1, std::move(out));
}

LaurentPoly rescale(const LaurentPoly& p, std::span<const double> radii) {
  const int n = p.n_vars();
  if (static_cast<int>(radii.size()) != n) throw UsageError("rescale: radii count mismatch");
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    Complex t = c;
    for (int i = 0; i < n; ++i) {
      if (e[i] != 0) t *= std::pow(radii[i], static_cast<double>(e[i]));
    }
    out.emplace_back(e, t);
  }
  return LaurentPoly::from_terms(n, std::move(out));
}

const LaurentPoly& YFactorization::coefficient(int j) const {
  if (j < 0 || j > degree) throw UsageError("YFactorization::coefficient: index out of range");
  if (j == 0) return constant;
  if (j == degree) return leading;
  return middle[j - 1];
}

LaurentPoly YFactorization::reassemble() const {
  std::vector<LaurentPoly::Term> out;
  const bool univariate = source_vars == 1;
  const int total = source_vars;
  for (int j = 0; j <= degree; ++j) {
    for (const auto& [e, c] : coefficient(j).terms()) {
      Exponent f{};
      if (univariate) {
        f[0] = detail::checked_exponent(j - pole_order);
      } else {
        int k = 0;
        for (int i = 0; i < total; ++i) {
          if (i == var) {
            f[i] = detail::checked_exponent(j - pole_order);
          } else {
            f[i] = e[k++];
          }
        }
      }
      out.emplace_back(f, c);
    }
  }
  return LaurentPoly::from_terms(total, std::move(out));
}

YFactorization factor_in_variable(const LaurentPoly& p, int var) {
  const int n = p.n_vars();
  if (var < 0 || var >= n) throw UsageError("factor_in_variable: variable index out of range");
  if (p.is_zero() || !p.depends_on(var)) {
    throw DegenerateFactorization("polynomial does not depend on variable " + std::to_string(var));
  }
  YFactorization f;
  f.var = var;
  f.source_vars = n;
  const int lo = p.min_exponent(var);
  const int hi = p.max_exponent(var);
  f.pole_order = std::max(0, -lo);
  f.degree = hi + f.pole_order;
  if (f.degree <= 0) {
    throw DegenerateFactorization("polynomial has no positive span in variable " +
                                  std::to_string(var) + " after clearing the pole");
  }
  const int m = remaining_vars(n);
  std::vector<std::vector<LaurentPoly::Term>> buckets(static_cast<std::size_t>(f.degree) + 1);
  for (const auto& [e, c] : p.terms()) {
    int j = e[var] + f.pole_order;
    Exponent g = n > 1 ? drop_slot(e, var, n) : Exponent{};
    buckets[static_cast<std::size_t>(j)].emplace_back(g, c);
  }
  f.constant = LaurentPoly::from_terms(m, std::move(buckets.front()));
  f.leading = LaurentPoly::from_terms(m, std::move(buckets.back()));
  for (int j = 1; j < f.degree; ++j) {
    f.middle.push_back(LaurentPoly::from_terms(m, std::move(buckets[static_cast<std::size_t>(j)])));
  }
  return f;
}

LaurentPoly family_member(const LaurentPoly& base, Complex r) { return r - base; }

LaurentPoly tempered_family_base() {
  LaurentPoly x = LaurentPoly::variable(2, 0, 1);
  LaurentPoly xi = LaurentPoly::variable(2, 0, -1);
  LaurentPoly y = LaurentPoly::variable(2, 1, 1);
  LaurentPoly yi = LaurentPoly::variable(2, 1, -1);
  return -(x + xi + y + yi);
}

Rational exact_rational(double v) {
  if (!std::isfinite(v)) throw UsageError("exact_rational: non-finite value");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(v, &exp);
  // mant * 2^53 is an integer for any double.
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  boost::multiprecision::cpp_int two_pow = 1;
  two_pow <<= std::abs(exp);
  if (exp >= 0) {
    r *= Rational(two_pow);
  } else {
    r /= Rational(two_pow);
  }
  return r;
}

bool GaussianRational::is_integer() const {
  return im == 0 && boost::multiprecision::denominator(re) == 1;
}

std::string GaussianRational::str() const {
  if (im == 0) return re.str();
  return re.str() + (im < 0 ? "-" : "+") + Rational(abs(im)).str() + "i";
}

ExactLaurentPoly to_exact(const LaurentPoly& p) {
  std::vector<ExactLaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    out.emplace_back(e, GaussianRational(exact_rational(c.real()), exact_rational(c.imag())));
  }
  return ExactLaurentPoly::from_terms(p.n_vars(), std::move(out));
}

LaurentPoly to_double(const ExactLaurentPoly& p) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    out.emplace_back(e, Complex(c.re.convert_to<double>(), c.im.convert_to<double>()));
  }
  return LaurentPoly::from_terms(p.n_vars(), std::move(out));
}

}  // namespace mahler
