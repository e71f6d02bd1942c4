#pragma once

#include <stdexcept>
#include <string>

namespace torsion {

// Base class for every mathematical failure the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& what, std::string offending_monomial)
      : Error(what), monomial_(std::move(offending_monomial)) {}
  const std::string& offending_monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

class NotASquare : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularCurve : public Error {
 public:
  using Error::Error;
};

class SingularParameter : public Error {
 public:
  using Error::Error;
};

// A computed object differs from its published reference display.
class ReferenceMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateRoot : public Error {
 public:
  using Error::Error;
};

class NoCommonRoot : public Error {
 public:
  using Error::Error;
};

class VerificationFailed : public Error {
 public:
  VerificationFailed(const std::string& what, std::string worst)
      : Error(what), worst_(std::move(worst)) {}
  const std::string& worst_residual() const noexcept { return worst_; }

 private:
  std::string worst_;
};

}  // namespace torsion
