// Closed-form coefficient families for d = 3 and d = 4, tabulated endpoint
// phases of maximally entangled bases, and the interpolation schedule that
// connects them to the product basis.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "eqbasis/core_math.hpp"

namespace eqb {

enum class FamilyId { D3Real, D3Complex, D4Real, D4Complex };

/// CLI spelling: "d3-real", "d3-complex", "d4-real", "d4-complex".
std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);
int family_dimension(FamilyId id);

/// Real qutrit family; product at phi = 0, peaks near 0.878 at phi = pi/4.
CoefficientVector family_d3_real(double phi);
/// N (2 cos phi, -exp(i phi), 2 cos phi), N = 1/sqrt(1 + 8 cos^2 phi).
/// Maximally entangled at phi = pi/3, product at phi = pi/2.
CoefficientVector family_d3_complex(double phi);
/// (cos t, 1 + sin t, -cos t, 1 - sin t) / 2. Maximal at t = 0.
CoefficientVector family_d4_real(double theta);
/// a0 = (1 + e^{it} cos t)/2, a1 = e^{it} sin t / 2, a2 = -i a1, a3 = -a1.
CoefficientVector family_d4_complex(double theta);

CoefficientVector family_coefficients(FamilyId id, double param_radians);

struct Table1Entry {
  int d;
  int variant;
  PhaseVector theta0;
};

/// Endpoint phases for (d, variant) in {(2,0), (3,0), (4,0), (4,1), (5,0)}.
/// Each entry is checked for flat synthesized moduli (within 1e-9) before it
/// is returned. Throws std::invalid_argument for unknown keys.
Table1Entry table1_phases(int d, int variant);

/// All tabulated entries in (d, variant) order.
std::vector<Table1Entry> table1_all();

/// theta_alpha = t * theta0_alpha, t in [0, 1].
PhaseVector interpolate(const PhaseVector& theta0, double t);

/// Quadratic (Zadoff-Chu type) phases: pi a^2 / d for even d and
/// pi a (a + 1) / d for odd d. Flatness is not promised here; callers verify.
PhaseVector quadratic_phases(int d);

}  // namespace eqb
