#include "eqbasis/search.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

#include "eqbasis/counter_rng.hpp"

namespace eqb {
namespace {

// Below this modulus the phase is undefined; project onto phase 0.
constexpr double kZeroModulus = 1e-15;

void project_to_modulus(std::vector<Complex>& v, double modulus) {
  for (auto& z : v) {
    const double r = std::abs(z);
    z = (r < kZeroModulus) ? Complex(modulus, 0.0) : z * (modulus / r);
  }
}

PhaseVector phases_of(const std::vector<Complex>& c) {
  std::vector<double> theta(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    theta[i] = std::abs(c[i]) < kZeroModulus ? 0.0 : std::arg(c[i]);
  }
  return PhaseVector(std::move(theta));
}

bool better(const SearchResult& x, const SearchResult& y) {
  if (x.residual != y.residual) return x.residual < y.residual;
  return x.restart_index < y.restart_index;
}

}  // namespace

void SearchConfig::validate() const {
  if (d < 2) throw std::invalid_argument("SearchConfig: d must be >= 2");
  if (max_iters < 1) throw std::invalid_argument("SearchConfig: max_iters must be positive");
  if (restarts < 1) throw std::invalid_argument("SearchConfig: restarts must be positive");
  if (!(residual_tol > 0.0)) throw std::invalid_argument("SearchConfig: residual_tol must be > 0");
}

double flatness_residual(const PhaseVector& theta) {
  return flatness_residual(synthesize_coefficients(theta));
}

PhaseVector random_phases(int d, std::uint64_t seed, std::uint64_t restart) {
  if (d < 2) throw std::invalid_argument("random_phases: d must be >= 2");
  const CounterRng rng(seed, restart);
  std::vector<double> theta(static_cast<std::size_t>(d), 0.0);
  for (int alpha = 1; alpha < d; ++alpha) {
    theta[static_cast<std::size_t>(alpha)] =
        kTwoPi * rng.uniform(static_cast<std::uint64_t>(alpha - 1));
  }
  return PhaseVector(std::move(theta));
}

SearchResult refine_phases(const PhaseVector& start, int max_iters, double tol) {
  const int d = start.dimension();
  const double flat = 1.0 / std::sqrt(static_cast<double>(d));
  PhaseVector theta = start;
  int iters = 0;
  double residual = 0.0;
  for (;;) {
    const CoefficientVector a = synthesize_coefficients(theta);
    residual = flatness_residual(a);
    if (residual < tol || iters >= max_iters) break;

    std::vector<Complex> b(a.values().begin(), a.values().end());
    project_to_modulus(b, flat);
    std::vector<Complex> c = inverse_dft(b);
    project_to_modulus(c, flat);
    theta = phases_of(c);
    ++iters;
  }
  return SearchResult{std::move(theta), residual, iters, residual < tol, 0};
}

SearchResult alternating_projection_search(const SearchConfig& cfg) {
  cfg.validate();
  const auto restarts = static_cast<std::size_t>(cfg.restarts);
  std::vector<std::optional<SearchResult>> results(restarts);

  auto run = [&](std::size_t r) {
    SearchResult res = refine_phases(random_phases(cfg.d, cfg.rng_seed, r), cfg.max_iters,
                                     cfg.residual_tol);
    res.restart_index = static_cast<int>(r);
    results[r] = std::move(res);
  };

  unsigned workers = cfg.workers != 0 ? cfg.workers : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1U, static_cast<unsigned>(restarts));
  if (workers == 1) {
    for (std::size_t r = 0; r < restarts; ++r) run(r);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < restarts; r += workers) run(r);
      });
    }
  }

  SearchResult best = *results.front();
  for (const auto& res : results) {
    if (better(*res, best)) best = *res;
  }
  return best;
}

bool Certificate::maximal(double residual_tol) const {
  return residual < residual_tol && gram_pass() && std::abs(entanglement.value() - 1.0) < 1e-9;
}

Certificate certify(const CoefficientVector& a) {
  return Certificate{flatness_residual(a), gram_check(a), entanglement(a)};
}

Certificate verify_solution(const PhaseVector& theta) {
  return certify(synthesize_coefficients(theta));
}

}  // namespace eqb
