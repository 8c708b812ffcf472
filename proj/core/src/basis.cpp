#include "eqbasis/basis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eqb {

StateVector::StateVector(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("StateVector: d must be >= 1");
  amp_.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), Complex{});
}

StateVector::StateVector(int d, std::vector<Complex> amplitudes)
    : d_(d), amp_(std::move(amplitudes)) {
  if (d < 1 || amp_.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
    throw std::invalid_argument("StateVector: expected d*d amplitudes");
  }
}

double StateVector::norm_squared() const {
  double n2 = 0.0;
  for (const auto& z : amp_) n2 += std::norm(z);
  return n2;
}

StateVector build_state(const CoefficientVector& a, BasisLabel label) {
  const int d = a.dimension();
  if (label.m < 0 || label.m >= d || label.n < 0 || label.n >= d) {
    throw std::invalid_argument("build_state: label (" + std::to_string(label.m) + "," +
                                std::to_string(label.n) + ") out of range for d=" +
                                std::to_string(d));
  }
  StateVector s(d);
  for (int i = 0; i < d; ++i) {
    s((i + label.m) % d, (i + label.m + label.n) % d) = a[static_cast<std::size_t>(i)];
  }
  return s;
}

std::vector<StateVector> build_basis(const CoefficientVector& a) {
  const int d = a.dimension();
  std::vector<StateVector> states;
  states.reserve(static_cast<std::size_t>(d * d));
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) states.push_back(build_state(a, {m, n}));
  }
  return states;
}

Complex inner_product(const StateVector& x, const StateVector& y) {
  if (x.dimension() != y.dimension()) {
    throw std::invalid_argument("inner_product: dimension mismatch (" +
                                std::to_string(x.dimension()) + " vs " +
                                std::to_string(y.dimension()) + ")");
  }
  Complex sum{0.0, 0.0};
  const auto xs = x.amplitudes();
  const auto ys = y.amplitudes();
  for (std::size_t i = 0; i < xs.size(); ++i) sum += std::conj(xs[i]) * ys[i];
  return sum;
}

GramReport gram_check(const CoefficientVector& a) {
  const int d = a.dimension();
  const auto states = build_basis(a);
  GramReport report;
  report.d = d;
  double worst = -1.0;
  for (std::size_t p = 0; p < states.size(); ++p) {
    for (std::size_t q = 0; q < states.size(); ++q) {
      const Complex g = inner_product(states[p], states[q]);
      double dev;
      if (p == q) {
        dev = std::abs(g - 1.0);
        report.max_diag_dev = std::max(report.max_diag_dev, dev);
      } else {
        dev = std::abs(g);
        report.max_offdiag = std::max(report.max_offdiag, dev);
      }
      if (dev > worst) {
        worst = dev;
        const int ip = static_cast<int>(p);
        const int iq = static_cast<int>(q);
        report.worst_pair = {BasisLabel{ip / d, ip % d}, BasisLabel{iq / d, iq % d}};
      }
    }
  }
  return report;
}

std::vector<double> reduced_spectrum(const StateVector& s) {
  const int d = s.dimension();
  Eigen::MatrixXcd m(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) m(j, k) = s(j, k);
  }
  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::domain_error("reduced_spectrum: eigen decomposition failed");
  }
  std::vector<double> lambda(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    double v = solver.eigenvalues()(i);
    if (v < 0.0) {
      if (v < -1e-12) {
        throw std::domain_error("reduced_spectrum: negative eigenvalue " + std::to_string(v));
      }
      v = 0.0;
    }
    lambda[static_cast<std::size_t>(i)] = v;
  }
  return lambda;
}

EntanglementValue state_entanglement(const StateVector& s) {
  if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state_entanglement: state not normalized");
  }
  if (s.dimension() < 2) return EntanglementValue(0.0);
  return EntanglementValue(entropy_base_d(reduced_spectrum(s), s.dimension()));
}

}  // namespace eqb
