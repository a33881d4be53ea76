#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altruism {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input: parameters, schema violations, bad graph sizes.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// K(eta - rho) <= nu: the parasite equilibrium would vanish on [0,1].
class DegenerateEquilibrium : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InvalidSize : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class ThetaOutOfRange : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptySample : public Error {
 public:
  using Error::Error;
};

class InsufficientReplicas : public Error {
 public:
  using Error::Error;
};

/// Numerical failures map to CLI exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonFiniteState : public NumericalError {
 public:
  NonFiniteState(std::size_t step, std::size_t component, std::string detail = {})
      : NumericalError("non-finite state at step " + std::to_string(step) + ", component " +
                       std::to_string(component) + (detail.empty() ? "" : " (" + detail + ")")),
        step_(step),
        component_(component) {}

  std::size_t step() const noexcept { return step_; }
  std::size_t component() const noexcept { return component_; }

 private:
  std::size_t step_;
  std::size_t component_;
};

class QuadratureFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace altruism
