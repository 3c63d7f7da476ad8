#include <algorithm>
#include "loco/capacity.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace loco {
namespace {

struct PowerResult {
  double lambda;
  long iterations;
};

// Collatz-Wielandt bracketing on the identity-shifted matrix; the shift makes
// every irreducible block aperiodic so the bounds close geometrically.
PowerResult shifted_power_iteration(const std::vector<std::vector<double>>& m, double tol,
                                    long max_iterations) {
  const std::size_t n = m.size();
  std::vector<double> x(n, 1.0), y(n, 0.0);
  for (long it = 1; it <= max_iterations; ++it) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = x[i];  // identity shift
      for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * x[j];
      y[i] = acc;
      double ratio = acc / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      norm = std::max(norm, acc);
    }
    if (hi - lo <= tol * hi) {
      return {0.5 * (lo + hi) - 1.0, it};
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw std::runtime_error("power iteration did not converge within the iteration cap");
}

}  // namespace

double spectral_radius(const std::vector<std::vector<double>>& matrix, double tol,
                       long max_iterations) {
  if (matrix.empty()) throw std::invalid_argument("spectral_radius: empty matrix");
  for (const auto& row : matrix) {
    if (row.size() != matrix.size()) throw std::invalid_argument("spectral_radius: not square");
    for (double v : row) {
      if (v < 0.0) throw std::invalid_argument("spectral_radius: negative entry");
    }
  }
  if (tol <= 0.0) throw std::invalid_argument("spectral_radius: tol must be positive");
  return shifted_power_iteration(matrix, tol, max_iterations).lambda;
}

CapacityResult capacity(const ConstraintAutomaton& automaton, double tol) {
  const int n = automaton.state_count();
  const int q = automaton.q();

  std::vector<char> alive(static_cast<std::size_t>(n), 0);
  std::queue<int> bfs;
  bfs.push(automaton.start());
  alive[static_cast<std::size_t>(automaton.start())] = 1;
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop();
    for (int c = 0; c < q; ++c) {
      int t = automaton.next(s, c);
      if (t != ConstraintAutomaton::kReject && !alive[static_cast<std::size_t>(t)]) {
        alive[static_cast<std::size_t>(t)] = 1;
        bfs.push(t);
      }
    }
  }
  // Drop states with no infinite accepted continuation: peel states whose
  // every transition rejects or leads to an already-dropped state.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (!alive[static_cast<std::size_t>(s)]) continue;
      bool has_out = false;
      for (int c = 0; c < q && !has_out; ++c) {
        int t = automaton.next(s, c);
        has_out = t != ConstraintAutomaton::kReject && alive[static_cast<std::size_t>(t)];
      }
      if (!has_out) {
        alive[static_cast<std::size_t>(s)] = 0;
        changed = true;
      }
    }
  }

  std::vector<int> keep;
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (alive[static_cast<std::size_t>(s)]) {
      idx[static_cast<std::size_t>(s)] = static_cast<int>(keep.size());
      keep.push_back(s);
    }
  }
  if (keep.empty()) {
    throw std::domain_error("degenerate constraint: no arbitrarily long words are accepted");
  }

  std::vector<std::vector<double>> counts(keep.size(), std::vector<double>(keep.size(), 0.0));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (int c = 0; c < q; ++c) {
      int t = automaton.next(keep[a], c);
      if (t != ConstraintAutomaton::kReject && alive[static_cast<std::size_t>(t)]) {
        counts[a][static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])] += 1.0;
      }
    }
  }

  auto power = shifted_power_iteration(counts, tol, 1000000);
  CapacityResult result;
  result.spectral_radius = power.lambda;
  result.bits_per_symbol = std::log2(power.lambda);
  result.normalized = result.bits_per_symbol / std::log2(static_cast<double>(q));
  result.iterations = power.iterations;
  return result;
}

}  // namespace loco
