#pragma once

#include <stdexcept>
#include <string>

namespace coxspec {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch, non-square or asymmetric input.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Argument outside the domain of an operation (non-positive entries,
/// boundary points where interior ones are required, t <= 0, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// Weights violating sum_j m_j x_j = 1 or x_j in [0, 1].
class SimplexError : public Error {
public:
  using Error::Error;
};

/// A group-invariance property that must hold exactly failed numerically.
/// Signals a broken eigensolver or clustering rather than a user error.
class InvarianceError : public Error {
public:
  using Error::Error;
};

/// Coxeter datum whose Gram matrix is not positive definite, or closure
/// exceeding the element cap.
class GroupError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  IoError(const std::string& what, std::string path)
      : Error(what + ": " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace coxspec
