#pragma once

#include <vector>

#include "loco/constraint.hpp"

namespace loco {

struct CapacityResult {
  double spectral_radius = 0.0;
  double bits_per_symbol = 0.0;  // log2(spectral_radius)
  double normalized = 0.0;       // bits_per_symbol / log2(q)
  long iterations = 0;
};

/// Largest real eigenvalue of a non-negative square matrix by power iteration
/// (all-ones start, periodic normalization, identity shift against periodic
/// graphs). Throws std::runtime_error when the Collatz bounds have not closed
/// to `tol` within `max_iterations`; there is no silent fallback.
double spectral_radius(const std::vector<std::vector<double>>& matrix, double tol = 1e-10,
                       long max_iterations = 1000000);

/// Capacity of the constraint: log2 of the spectral radius of the
/// transition-count matrix over non-rejecting states, after trimming states
/// that are unreachable from start or admit no infinite accepted
/// continuation. Throws std::domain_error when the constraint admits no
/// arbitrarily long words (degenerate).
CapacityResult capacity(const ConstraintAutomaton& automaton, double tol = 1e-10);

}  // namespace loco
