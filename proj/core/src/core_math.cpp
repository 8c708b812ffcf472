#include "eqbasis/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eqb {
namespace {

// Powers xi^0 .. xi^(d-1) of the primitive d-th root of unity.
std::vector<Complex> root_table(int d) {
  std::vector<Complex> table(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    table[static_cast<std::size_t>(j)] = root_of_unity(d, j);
  }
  return table;
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Complex root_of_unity(int d, long long p) {
  if (d < 1) {
    throw std::invalid_argument("root_of_unity: d must be >= 1, got " + std::to_string(d));
  }
  long long r = p % d;
  if (r < 0) r += d;
  if ((4 * r) % d == 0) {
    switch ((4 * r) / d) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(d));
}

double reduce_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a negative value just below zero can round up to exactly 2 pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

PhaseVector::PhaseVector(std::vector<double> theta) : theta_(std::move(theta)) {
  if (theta_.size() < 2) {
    throw std::invalid_argument("PhaseVector: need at least 2 phases, got " +
                                std::to_string(theta_.size()));
  }
  for (double t : theta_) {
    if (!std::isfinite(t)) throw std::invalid_argument("PhaseVector: non-finite phase");
  }
  const double gauge = theta_[0];
  for (double& t : theta_) t = reduce_angle(t - gauge);
  theta_[0] = 0.0;
}

PhaseVector PhaseVector::zeros(int d) {
  if (d < 2) throw std::invalid_argument("PhaseVector::zeros: d must be >= 2");
  return PhaseVector(std::vector<double>(static_cast<std::size_t>(d), 0.0));
}

bool equivalent(const PhaseVector& x, const PhaseVector& y, double tol) {
  if (x.dimension() != y.dimension()) return false;
  for (int alpha = 0; alpha < x.dimension(); ++alpha) {
    const double diff = reduce_angle(x[alpha] - y[alpha]);
    if (std::min(diff, kTwoPi - diff) > tol) return false;
  }
  return true;
}

CoefficientVector::CoefficientVector(std::vector<Complex> a) : a_(std::move(a)) {
  if (a_.size() < 2) {
    throw std::invalid_argument("CoefficientVector: dimension must be >= 2");
  }
  if (!std::all_of(a_.begin(), a_.end(), finite)) {
    throw std::invalid_argument("CoefficientVector: non-finite amplitude");
  }
  const double n2 = norm_squared();
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("CoefficientVector: not normalized (|a|^2 = " +
                                std::to_string(n2) + ")");
  }
}

CoefficientVector CoefficientVector::normalized(std::vector<Complex> raw) {
  double n2 = 0.0;
  for (const auto& z : raw) n2 += std::norm(z);
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw std::invalid_argument("CoefficientVector::normalized: zero or non-finite vector");
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& z : raw) z *= scale;
  return CoefficientVector(std::move(raw));
}

double CoefficientVector::norm_squared() const {
  double n2 = 0.0;
  for (const auto& z : a_) n2 += std::norm(z);
  return n2;
}

EntanglementValue::EntanglementValue(double e) {
  if (!(e >= -1e-12 && e <= 1.0 + 1e-12)) {
    throw std::invalid_argument("EntanglementValue out of [0, 1]: " + std::to_string(e));
  }
  e_ = std::clamp(e, 0.0, 1.0);
}

CoefficientVector synthesize_coefficients(const PhaseVector& phases) {
  const int d = phases.dimension();
  const auto xi = root_table(d);
  std::vector<Complex> spectrum(static_cast<std::size_t>(d));
  for (int alpha = 0; alpha < d; ++alpha) {
    spectrum[static_cast<std::size_t>(alpha)] = std::polar(1.0, phases[alpha]);
  }
  std::vector<Complex> a(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    Complex sum{0.0, 0.0};
    for (int alpha = 0; alpha < d; ++alpha) {
      sum += spectrum[static_cast<std::size_t>(alpha)] *
             xi[static_cast<std::size_t>((k * alpha) % d)];
    }
    a[static_cast<std::size_t>(k)] = sum / static_cast<double>(d);
  }
  return CoefficientVector(std::move(a));
}

Complex autocorrelation(const CoefficientVector& a, int m) {
  const int d = a.dimension();
  if (m < 0 || m >= d) {
    throw std::invalid_argument("autocorrelation: lag " + std::to_string(m) +
                                " outside [0, " + std::to_string(d - 1) + "]");
  }
  Complex sum{0.0, 0.0};
  for (int i = 0; i < d; ++i) {
    sum += std::conj(a[static_cast<std::size_t>(i)]) * a[static_cast<std::size_t>((i + m) % d)];
  }
  return sum;
}

double entropy_base_d(std::span<const double> weights, int d) {
  if (d < 2) throw std::invalid_argument("entropy_base_d: d must be >= 2");
  const double log_d = std::log(static_cast<double>(d));
  double h = 0.0;
  for (double w : weights) {
    if (w < -1e-12 || !std::isfinite(w)) {
      throw std::invalid_argument("entropy_base_d: invalid weight " + std::to_string(w));
    }
    if (w > 0.0) h -= w * std::log(w);
  }
  return h / log_d;
}

EntanglementValue entanglement(const CoefficientVector& a) {
  if (std::abs(a.norm_squared() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("entanglement: coefficient vector not normalized");
  }
  std::vector<double> weights;
  weights.reserve(a.values().size());
  for (const auto& z : a.values()) weights.push_back(std::norm(z));
  return EntanglementValue(entropy_base_d(weights, a.dimension()));
}

namespace {

std::vector<Complex> transform(std::span<const Complex> v, int sign) {
  if (v.empty()) throw std::invalid_argument("dft: empty input");
  const int d = static_cast<int>(v.size());
  const auto xi = root_table(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> w(v.size());
  for (int j = 0; j < d; ++j) {
    Complex sum{0.0, 0.0};
    for (int alpha = 0; alpha < d; ++alpha) {
      int e = (j * alpha) % d;
      if (sign < 0 && e != 0) e = d - e;
      sum += v[static_cast<std::size_t>(alpha)] * xi[static_cast<std::size_t>(e)];
    }
    w[static_cast<std::size_t>(j)] = sum * scale;
  }
  return w;
}

}  // namespace

std::vector<Complex> dft(std::span<const Complex> v) { return transform(v, +1); }

std::vector<Complex> inverse_dft(std::span<const Complex> w) { return transform(w, -1); }

std::vector<Complex> spectral_autocorrelation(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("spectral_autocorrelation: empty input");
  const int d = static_cast<int>(weights.size());
  const auto xi = root_table(d);
  std::vector<Complex> r(weights.size());
  for (int m = 0; m < d; ++m) {
    Complex sum{0.0, 0.0};
    for (int alpha = 0; alpha < d; ++alpha) {
      sum += weights[static_cast<std::size_t>(alpha)] * xi[static_cast<std::size_t>((m * alpha) % d)];
    }
    r[static_cast<std::size_t>(m)] = sum;
  }
  return r;
}

double flatness_residual(const CoefficientVector& a) {
  const double target = 1.0 / std::sqrt(static_cast<double>(a.dimension()));
  double worst = 0.0;
  for (const auto& z : a.values()) worst = std::max(worst, std::abs(std::abs(z) - target));
  return worst;
}

}  // namespace eqb
