#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mahler/errors.hpp"

namespace mahler {

using Complex = std::complex<double>;

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxDegree = 30000;

// Exponent vector of a monomial. Slots at or beyond n_vars are always zero,
// so equality and hashing can look at the whole array.
using Exponent = std::array<std::int16_t, kMaxVars>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int16_t v : e) {
      h ^= static_cast<std::uint16_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

inline std::int16_t checked_exponent(long v) {
  if (v > kMaxDegree || v < -kMaxDegree) {
    throw UsageError("exponent " + std::to_string(v) + " exceeds the degree cap of " +
                     std::to_string(kMaxDegree));
  }
  return static_cast<std::int16_t>(v);
}

inline Exponent add_exponents(const Exponent& a, const Exponent& b, int n) {
  Exponent out{};
  for (int i = 0; i < n; ++i) out[i] = checked_exponent(long{a[i]} + long{b[i]});
  return out;
}

template <class Coeff>
bool coeff_is_zero(const Coeff& c) {
  return c == Coeff{};
}

}  // namespace detail

// Sparse Laurent polynomial in n_vars variables. Terms are kept sorted by
// exponent with no stored zero coefficient, so structural equality is
// polynomial equality. Values are immutable in practice: every operation
// returns a new polynomial.
template <class Coeff>
class BasicLaurentPoly {
 public:
  using coefficient_type = Coeff;
  using Term = std::pair<Exponent, Coeff>;

  BasicLaurentPoly() : BasicLaurentPoly(1) {}
  explicit BasicLaurentPoly(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1 || n_vars > kMaxVars) {
      throw UsageError("number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
    }
  }

  static BasicLaurentPoly from_terms(int n_vars, std::vector<Term> terms) {
    BasicLaurentPoly p(n_vars);
    for (auto& [e, c] : terms) {
      for (int i = n_vars; i < kMaxVars; ++i) {
        if (e[i] != 0) throw UsageError("exponent set for a variable beyond n_vars");
      }
      for (int i = 0; i < n_vars; ++i) detail::checked_exponent(e[i]);
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = p.terms_.back().second + t.second;
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    p.drop_zeros();
    return p;
  }

  static BasicLaurentPoly constant(int n_vars, const Coeff& c) {
    return from_terms(n_vars, {Term{Exponent{}, c}});
  }

  static BasicLaurentPoly monomial(int n_vars, std::span<const int> exponents, const Coeff& c) {
    if (static_cast<int>(exponents.size()) != n_vars) {
      throw UsageError("monomial exponent count does not match n_vars");
    }
    Exponent e{};
    for (int i = 0; i < n_vars; ++i) e[i] = detail::checked_exponent(exponents[i]);
    return from_terms(n_vars, {Term{e, c}});
  }

  static BasicLaurentPoly monomial(int n_vars, std::initializer_list<int> exponents,
                                   const Coeff& c) {
    std::vector<int> v(exponents);
    return monomial(n_vars, std::span<const int>(v), c);
  }

  // x_index^power with unit coefficient.
  static BasicLaurentPoly variable(int n_vars, int index, int power = 1) {
    if (index < 0 || index >= n_vars) throw UsageError("variable index out of range");
    Exponent e{};
    e[index] = detail::checked_exponent(power);
    return from_terms(n_vars, {Term{e, Coeff{1}}});
  }

  int n_vars() const noexcept { return n_vars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Coeff coefficient(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& key) { return t.first < key; });
    if (it != terms_.end() && it->first == e) return it->second;
    return Coeff{};
  }

  int min_exponent(int var) const {
    check_var(var);
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[var] < m) m = e[var];
      first = false;
    }
    return m;
  }

  int max_exponent(int var) const {
    check_var(var);
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[var] > m) m = e[var];
      first = false;
    }
    return m;
  }

  bool depends_on(int var) const {
    check_var(var);
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const Term& t) { return t.first[var] != 0; });
  }

  friend bool operator==(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

  BasicLaurentPoly operator-() const {
    BasicLaurentPoly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend BasicLaurentPoly operator+(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    a.check_same(b);
    std::vector<Term> merged;
    merged.reserve(a.terms_.size() + b.terms_.size());
    std::merge(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
               std::back_inserter(merged),
               [](const Term& x, const Term& y) { return x.first < y.first; });
    return from_sorted(a.n_vars_, std::move(merged));
  }

  friend BasicLaurentPoly operator-(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    return a + (-b);
  }

  friend BasicLaurentPoly operator*(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    a.check_same(b);
    std::unordered_map<Exponent, Coeff, ExponentHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        auto [it, inserted] = acc.try_emplace(detail::add_exponents(ea, eb, a.n_vars_), Coeff{});
        it->second = it->second + ca * cb;
      }
    }
    std::vector<Term> terms(acc.begin(), acc.end());
    return from_terms(a.n_vars_, std::move(terms));
  }

  friend BasicLaurentPoly operator*(const Coeff& s, const BasicLaurentPoly& p) {
    BasicLaurentPoly out(p.n_vars_);
    out.terms_.reserve(p.terms_.size());
    for (const auto& [e, c] : p.terms_) out.terms_.emplace_back(e, s * c);
    out.drop_zeros();
    return out;
  }
  friend BasicLaurentPoly operator*(const BasicLaurentPoly& p, const Coeff& s) { return s * p; }

  friend BasicLaurentPoly operator+(const BasicLaurentPoly& p, const Coeff& s) {
    return p + constant(p.n_vars_, s);
  }
  friend BasicLaurentPoly operator+(const Coeff& s, const BasicLaurentPoly& p) { return p + s; }
  friend BasicLaurentPoly operator-(const BasicLaurentPoly& p, const Coeff& s) {
    return p + constant(p.n_vars_, -s);
  }
  friend BasicLaurentPoly operator-(const Coeff& s, const BasicLaurentPoly& p) {
    return constant(p.n_vars_, s) - p;
  }

 private:
  static BasicLaurentPoly from_sorted(int n_vars, std::vector<Term> sorted) {
    BasicLaurentPoly p(n_vars);
    for (auto& t : sorted) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = p.terms_.back().second + t.second;
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    p.drop_zeros();
    return p;
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return detail::coeff_is_zero(t.second); });
  }

  void check_var(int var) const {
    if (var < 0 || var >= n_vars_) throw UsageError("variable index out of range");
  }

  void check_same(const BasicLaurentPoly& other) const {
    if (n_vars_ != other.n_vars_) {
      throw UsageError("polynomials have different numbers of variables (" +
                       std::to_string(n_vars_) + " vs " + std::to_string(other.n_vars_) + ")");
    }
  }

  int n_vars_;
  std::vector<Term> terms_;
};

using LaurentPoly = BasicLaurentPoly<Complex>;

template <class Coeff>
BasicLaurentPoly<Coeff> mul(const BasicLaurentPoly<Coeff>& p, const BasicLaurentPoly<Coeff>& q) {
  return p * q;
}

// Repeated squaring; pow(p, 0) is the constant 1.
template <class Coeff>
BasicLaurentPoly<Coeff> pow(const BasicLaurentPoly<Coeff>& p, int n) {
  if (n < 0) throw UsageError("pow: exponent must be non-negative");
  auto result = BasicLaurentPoly<Coeff>::constant(p.n_vars(), Coeff{1});
  auto base = p;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

template <class Coeff>
Coeff constant_term(const BasicLaurentPoly<Coeff>& p) {
  return p.coefficient(Exponent{});
}

// Integer power of a complex number by squaring; negative powers invert once.
Complex ipow(Complex z, int n);

// Sum of coeff * prod point_i^e_i, accumulated with Neumaier compensation.
// Throws DomainError when a zero coordinate meets a negative exponent.
Complex evaluate(const LaurentPoly& p, std::span<const Complex> point);
inline Complex evaluate(const LaurentPoly& p, std::initializer_list<Complex> point) {
  return evaluate(p, std::span<const Complex>(point.begin(), point.size()));
}

// Term-wise partial derivative with respect to variable `var`.
LaurentPoly derivative(const LaurentPoly& p, int var);

// Substitute `value` for variable `var`; the result has n_vars - 1 variables.
LaurentPoly slice(const LaurentPoly& p, int var, Complex value);

// Substitute values for every variable except `keep`; result is univariate.
LaurentPoly slice_all_but(const LaurentPoly& p, int keep, std::span<const Complex> values);

// Rescale x_i -> radii_i * x_i, turning a measure over T_radii into one over T.
LaurentPoly rescale(const LaurentPoly& p, std::span<const double> radii);

// p viewed as a polynomial in u = x_var:
//   p = u^{-pole_order} (leading u^degree + sum_j middle[j-1] u^j + constant)
// with leading/constant/middle polynomials in the remaining variables. For a
// univariate source they are constant polynomials in one variable.
struct YFactorization {
  int var = 0;
  int source_vars = 1;
  int pole_order = 0;
  int degree = 0;
  LaurentPoly leading;
  LaurentPoly constant;
  std::vector<LaurentPoly> middle;  // coefficients of u^1 .. u^{degree-1}

  // Coefficient of u^j for j in [0, degree].
  const LaurentPoly& coefficient(int j) const;
  LaurentPoly reassemble() const;
};

YFactorization factor_in_variable(const LaurentPoly& p, int var);

// Text format: sums of products of coefficients and variables with integer
// exponents, e.g. "x + x^-1 + y + y^-1 + 4" or "(1+2i)*x1^2*x2 - 3". Variables
// are x, y, z, w or x1 .. x8. When n_vars is 0 the arity is inferred.
LaurentPoly parse_poly(std::string_view text, int n_vars = 0);

// Canonical text; parse_poly(to_string(p), p.n_vars()) == p exactly.
std::string to_string(const LaurentPoly& p);

// Family polynomial r - base.
LaurentPoly family_member(const LaurentPoly& base, Complex r);

// Base of the tempered family: -(x + 1/x + y + 1/y), so that
// family_member(base, r) = x + 1/x + y + 1/y + r.
LaurentPoly tempered_family_base();

}  // namespace mahler
