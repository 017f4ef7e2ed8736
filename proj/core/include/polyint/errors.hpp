#pragma once

#include <stdexcept>
#include <string>

namespace polyint {

// Argument outside the domain an operation supports.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument sits on a pole (nonpositive integer for digamma/polygamma, lambda <= -1
// for extended harmonic numbers).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The requested series or value does not exist (e.g. Li_1(1), S_{p,1}).
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numerical procedure hit its iteration or level cap before reaching the
// requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polyint
