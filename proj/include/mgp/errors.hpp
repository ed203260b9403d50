#pragma once

#include <stdexcept>
#include <string>

namespace mgp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Kernel evaluated exactly on its diagonal singularity.
class SingularPointError : public DomainError {
 public:
  explicit SingularPointError(const std::string& msg) : DomainError(msg) {}
};

// Adaptive quadrature failed to meet its tolerance within the panel budget.
class QuadratureError : public Error {
 public:
  explicit QuadratureError(const std::string& msg) : Error(msg) {}
};

// Matrix not positive semidefinite within the jitter budget.
class NotPsdError : public Error {
 public:
  explicit NotPsdError(const std::string& msg) : Error(msg) {}
};

// Problem size exceeds a documented cost guard.
class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& msg) : Error(msg) {}
};

// Operation requires more regularity than the profile provides.
class UnsupportedProfileError : public Error {
 public:
  explicit UnsupportedProfileError(const std::string& msg) : Error(msg) {}
};

// Invalid scenario configuration; message carries the offending path.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace mgp
