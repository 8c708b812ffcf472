// Complex-vector primitives for equi-entangled bases of two qudits.
//
// A basis is generated by one diagonal state |psi_00> = sum_i a_i |i,i> and
// cyclic shifts of it. The amplitudes a_k are synthesized from d phases
// theta_alpha through the discrete Fourier transform,
//
//     a_k = (1/d) sum_alpha exp(i theta_alpha) xi^(k alpha),  xi = exp(2 pi i / d),
//
// which makes the cyclic autocorrelation of a vanish at every nonzero lag.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace eqb {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Unit-norm inputs further than this from 1 are rejected.
inline constexpr double kNormTolerance = 1e-9;
// Orthonormality and autocorrelation checks.
inline constexpr double kOrthoTolerance = 1e-12;

/// exp(2 pi i p / d). Exact (bit-for-bit) whenever p/d is a multiple of a
/// quarter turn. Throws std::invalid_argument for d < 1.
Complex root_of_unity(int d, long long p);

/// Reduces an angle into [0, 2 pi).
double reduce_angle(double radians);

/// The d phases theta_alpha parameterizing one basis, always held in canonical
/// form: theta[0] == 0 and every entry reduced into [0, 2 pi).
class PhaseVector {
 public:
  /// Gauge-fixes by subtracting theta[0] from every entry, then reduces.
  /// Throws std::invalid_argument if fewer than 2 phases or any is non-finite.
  explicit PhaseVector(std::vector<double> theta);

  static PhaseVector zeros(int d);

  int dimension() const { return static_cast<int>(theta_.size()); }
  std::span<const double> values() const { return theta_; }
  double operator[](std::size_t alpha) const { return theta_[alpha]; }

  bool operator==(const PhaseVector&) const = default;

 private:
  std::vector<double> theta_;
};

/// True if every phase agrees modulo 2 pi within `tol` radians.
bool equivalent(const PhaseVector& x, const PhaseVector& y, double tol);

/// Amplitudes a_k of |psi_00>. Unit norm is enforced at construction.
class CoefficientVector {
 public:
  /// Throws std::invalid_argument if d < 2, an entry is non-finite, or the
  /// squared norm differs from 1 by more than kNormTolerance.
  explicit CoefficientVector(std::vector<Complex> a);

  /// Rescales arbitrary nonzero amplitudes to unit norm.
  static CoefficientVector normalized(std::vector<Complex> raw);

  int dimension() const { return static_cast<int>(a_.size()); }
  std::span<const Complex> values() const { return a_; }
  const Complex& operator[](std::size_t k) const { return a_[k]; }
  double norm_squared() const;

 private:
  std::vector<Complex> a_;
};

/// Base-d von Neumann entropy of a bipartite pure state; 0 for product
/// states, 1 for maximally entangled ones.
class EntanglementValue {
 public:
  /// Throws std::invalid_argument outside [0, 1 + 1e-12]; clamps into [0, 1].
  explicit EntanglementValue(double e);
  double value() const { return e_; }

 private:
  double e_;
};

CoefficientVector synthesize_coefficients(const PhaseVector& phases);

/// sum_i conj(a_i) a_{(i+m) mod d}. Throws std::invalid_argument unless
/// 0 <= m < d.
Complex autocorrelation(const CoefficientVector& a, int m);

/// -sum_k |a_k|^2 log_d |a_k|^2 with 0 log 0 = 0.
EntanglementValue entanglement(const CoefficientVector& a);

/// -sum w log_d w over a probability vector. Weights in [-1e-12, 0) are
/// treated as zero; more negative weights throw std::invalid_argument.
double entropy_base_d(std::span<const double> weights, int d);

/// Unitary DFT w_j = (1/sqrt d) sum_alpha v_alpha xi^(+j alpha).
std::vector<Complex> dft(std::span<const Complex> v);
/// Conjugate transform; inverse of dft().
std::vector<Complex> inverse_dft(std::span<const Complex> w);

/// Left-hand side of the linear system for the spectral weights
/// w_alpha = |c_alpha|^2: r_m = sum_alpha w_alpha xi^(m alpha). For any unit
/// vector a with c = inverse_dft(a), r_m equals autocorrelation(a, m).
std::vector<Complex> spectral_autocorrelation(std::span<const double> weights);

/// max_k | |a_k| - 1/sqrt(d) |; zero iff the state is maximally entangled.
double flatness_residual(const CoefficientVector& a);

}  // namespace eqb
