#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace awq {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a Scalar at a point where its denominator vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Violated contract of an operation (bad parameters, bad shapes).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal algebraic identity failed; signals a bug in the operator algebra.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A recurrence coefficient C_n vanished, so the sequence is not an OPS up to the horizon.
class BreakdownError : public Error {
 public:
  BreakdownError(long n, const std::string& what) : Error(what), n_(n) {}
  long index() const noexcept { return n_; }

 private:
  long n_;
};

/// r_n = t_n + a_n - a_{n-1} vanished while the standing assumption r_n != 0 was enforced.
class StandingAssumptionError : public Error {
 public:
  StandingAssumptionError(long n, const std::string& what) : Error(what), n_(n) {}
  long index() const noexcept { return n_; }

 private:
  long n_;
};

/// A sequence fails to have a required closed-form shape from index n on.
class StructureViolation : public Error {
 public:
  StructureViolation(long n, const std::string& what) : Error(what), n_(n) {}
  long index() const noexcept { return n_; }

 private:
  long n_;
};

}  // namespace awq
