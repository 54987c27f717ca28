#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mahler {

// Root of the library's exception hierarchy. Callers that only care about
// "bad input" vs "the numerics gave up" can catch UsageError / Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: mismatched arity, unparsable text, invalid flags.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Evaluation outside the domain of a Laurent polynomial (x = 0 with a
// negative exponent present).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateFactorization : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, std::vector<double> residuals)
      : Error(what), residuals_(std::move(residuals)) {}
  explicit NumericalFailure(const std::string& what) : Error(what) {}

  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

class SingularityDominated : public Error {
 public:
  using Error::Error;
};

class ZeroOnContour : public Error {
 public:
  using Error::Error;
};

class NonIntegral : public Error {
 public:
  using Error::Error;
};

class PreconditionNotMet : public Error {
 public:
  using Error::Error;
};

class MixedRoots : public Error {
 public:
  using Error::Error;
};

class DivergentSeries : public Error {
 public:
  using Error::Error;
};

}  // namespace mahler
