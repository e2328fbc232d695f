#ifndef QCBOUND_ERROR_HPP
#define QCBOUND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qcbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape or subsystem-dimension mismatch.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Input violates a mathematical precondition (not Hermitian, not PSD, not
/// trace preserving, parameter out of range, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Numerical breakdown inside an algorithm (solver, cross-validation).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what) {}
};

}  // namespace qcbound

#endif  // QCBOUND_ERROR_HPP
