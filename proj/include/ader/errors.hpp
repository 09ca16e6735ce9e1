#pragma once

#include <stdexcept>
#include <string>

namespace ader {

/// Invalid run parameters: unsupported order, bad CFL, unknown preset.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state left the admissible set (e.g. negative density or pressure).
class PhysicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative or linear solver breakdown (singular Jacobian, no root found).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ader
