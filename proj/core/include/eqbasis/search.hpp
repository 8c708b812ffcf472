// Numerical search for phase vectors whose synthesized coefficients all have
// modulus 1/sqrt(d), i.e. endpoints of an interpolating basis that are
// maximally entangled.
//
// The search alternates between two constraint sets linked by the DFT: flat
// moduli on the coefficient side and unit moduli on the phase side. Each
// restart starts from uniform random phases drawn from a counter-based
// generator keyed by (rng_seed, restart_index).

#pragma once

#include <cstdint>

#include "eqbasis/basis.hpp"
#include "eqbasis/core_math.hpp"

namespace eqb {

struct SearchConfig {
  int d = 2;
  int max_iters = 10000;
  double residual_tol = 1e-10;
  int restarts = 32;
  std::uint64_t rng_seed = 0;
  // Worker threads for restarts; 0 picks hardware concurrency. The result
  // does not depend on this value.
  unsigned workers = 0;

  /// Throws std::invalid_argument on d < 2, non-positive counts or tol <= 0.
  void validate() const;
};

struct SearchResult {
  PhaseVector theta;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  int restart_index = 0;
};

/// flatness_residual(synthesize_coefficients(theta)).
double flatness_residual(const PhaseVector& theta);

/// Uniform phases in [0, 2 pi)^d with theta_0 = 0, from stream `restart`.
PhaseVector random_phases(int d, std::uint64_t seed, std::uint64_t restart);

/// Runs the alternating projections from `start` until the residual drops
/// below `tol` or `max_iters` projection rounds have run. `iterations`
/// counts rounds, so a start that is already flat reports 0.
SearchResult refine_phases(const PhaseVector& start, int max_iters, double tol);

/// Best result over all restarts: lowest residual, ties to the lowest
/// restart index. Deterministic for a fixed config.
SearchResult alternating_projection_search(const SearchConfig& cfg);

struct Certificate {
  double residual = 0.0;
  GramReport gram;
  EntanglementValue entanglement{0.0};

  bool gram_pass() const { return gram.passed(); }
  /// Maximally entangled basis: flat moduli, orthonormal, E = 1.
  bool maximal(double residual_tol = 1e-9) const;
};

Certificate certify(const CoefficientVector& a);
Certificate verify_solution(const PhaseVector& theta);

}  // namespace eqb
