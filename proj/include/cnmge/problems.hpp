#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cnmge/linalg.hpp"

namespace cnmge {

enum class ProblemScale { kSmall, kLarge };

/// Objective with analytic gradient and its known global minimum, if any.
struct Problem {
  std::string key;   ///< lookup name, lower-case with dashes
  std::string name;  ///< display name
  int number = 0;    ///< index in the benchmark listing
  int dimension = 0;
  bool scalable = false;
  ProblemScale scale = ProblemScale::kSmall;

  ScalarFunction f;
  VectorFunction grad;
  MatrixFunction hess;  ///< may be empty; forward differences of grad are used then

  std::optional<double> known_min;
  std::optional<Vector> known_argmin;
  /// known_min is the value on the customary search box; the unconstrained
  /// problem may go lower, so "solved" means f <= known_min.
  bool box_constrained_min = false;

  /// For problems without a known minimum: best value reported for the
  /// method at `reference_dimension`.
  std::optional<double> reference_value;
  int reference_dimension = 0;
};

namespace problems {

constexpr int kDefaultLargeDimension = 100;

/// Every catalog entry at its default dimension (large problems at n = 100).
std::vector<Problem> catalog();

/// Keys in catalog order.
std::vector<std::string> keys();

/// Builds a problem by key.  `dimension` <= 0 selects the default; a
/// dimension for a fixed-size problem must equal its native size.
/// Throws std::invalid_argument for unknown keys or unsupported dimensions.
Problem make(const std::string& key, int dimension = 0);

/// Case-insensitive lookup accepting either the key or the display name.
std::optional<std::string> resolve_key(const std::string& name);

double molecular_energy(const Vector& omega);
Vector molecular_energy_gradient(const Vector& omega);

}  // namespace problems
}  // namespace cnmge
