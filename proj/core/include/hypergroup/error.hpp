#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hypergroup {

/// Broad failure classes. The CLI maps each one to a process exit code.
enum class ErrorKind {
  domain,        ///< parameter outside an operation's domain
  regime,        ///< functional not representable by a measure
  resource,      ///< enumeration or matrix size bound exceeded
  verification,  ///< a cross-check or oracle disagreed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

/// Evaluation hit a pole. Carries the offending point.
class SingularityError : public DomainError {
 public:
  SingularityError(const std::string& what, std::complex<double> z, std::complex<double> t)
      : DomainError(what), z_(z), t_(t) {}
  std::complex<double> z() const noexcept { return z_; }
  std::complex<double> t() const noexcept { return t_; }

 private:
  std::complex<double> z_;
  std::complex<double> t_;
};

class RegimeError : public Error {
 public:
  explicit RegimeError(const std::string& what) : Error(ErrorKind::regime, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& what) : Error(ErrorKind::verification, what) {}
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace hypergroup
