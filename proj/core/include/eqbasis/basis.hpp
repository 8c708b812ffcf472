// The d^2 basis states |psi_mn> = (S^m (x) S^(m+n)) |psi_00>, brute-force
// orthonormality checks, and an entanglement oracle that works from the full
// bipartite amplitude matrix rather than from the coefficients.

#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "eqbasis/core_math.hpp"

namespace eqb {

struct BasisLabel {
  int m = 0;
  int n = 0;
  auto operator<=>(const BasisLabel&) const = default;
};

/// Pure state of two qudits; amplitude (j, k) multiplies |j, k>.
class StateVector {
 public:
  explicit StateVector(int d);
  /// Row-major d*d amplitudes. Throws std::invalid_argument on size mismatch.
  StateVector(int d, std::vector<Complex> amplitudes);

  int dimension() const { return d_; }
  Complex& operator()(int j, int k) { return amp_[index(j, k)]; }
  const Complex& operator()(int j, int k) const { return amp_[index(j, k)]; }
  std::span<const Complex> amplitudes() const { return amp_; }
  double norm_squared() const;

  bool operator==(const StateVector&) const = default;

 private:
  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(d_) + static_cast<std::size_t>(k);
  }

  int d_;
  std::vector<Complex> amp_;
};

/// amp[(i+m) mod d][(i+m+n) mod d] = a_i. Throws std::invalid_argument for a
/// label outside [0, d).
StateVector build_state(const CoefficientVector& a, BasisLabel label);

/// All d^2 states ordered by (m, n).
std::vector<StateVector> build_basis(const CoefficientVector& a);

/// <x|y>, conjugate-linear in x. Throws std::invalid_argument if dimensions differ.
Complex inner_product(const StateVector& x, const StateVector& y);

struct GramReport {
  int d = 0;
  double max_offdiag = 0.0;
  double max_diag_dev = 0.0;
  std::pair<BasisLabel, BasisLabel> worst_pair;

  bool passed(double tol = kOrthoTolerance) const {
    return max_offdiag < tol && max_diag_dev < tol;
  }
};

/// Evaluates every one of the d^4 inner products among the basis states.
GramReport gram_check(const CoefficientVector& a);

/// Eigenvalues of rho_A = M M^dagger in ascending order. Values in
/// [-1e-12, 0) are clamped to zero; anything more negative throws
/// std::domain_error.
std::vector<double> reduced_spectrum(const StateVector& s);

/// Base-d entropy of reduced_spectrum(s). Throws std::invalid_argument if s
/// is not normalized within kNormTolerance.
EntanglementValue state_entanglement(const StateVector& s);

}  // namespace eqb
