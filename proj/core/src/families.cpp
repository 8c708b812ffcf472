#include "eqbasis/families.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eqb {
namespace {

constexpr double kTable1FlatnessTolerance = 1e-9;

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  int d;
};

constexpr std::array<FamilyInfo, 4> kFamilies{{
    {FamilyId::D3Real, "d3-real", 3},
    {FamilyId::D3Complex, "d3-complex", 3},
    {FamilyId::D4Real, "d4-real", 4},
    {FamilyId::D4Complex, "d4-complex", 4},
}};

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : kFamilies) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown FamilyId");
}

struct Table1Row {
  int d;
  int variant;
  std::vector<double> theta0;
};

std::vector<Table1Row> table1_rows() {
  return {
      {2, 0, {0.0, kPi / 2.0}},
      {3, 0, {0.0, 0.0, 2.0 * kPi / 3.0}},
      {4, 0, {0.0, 0.0, 0.0, kPi}},
      {4, 1, {0.0, kPi, kPi, kPi}},
      {5, 0, {0.0, 2.0 * kPi / 5.0, 0.0, 4.0 * kPi / 5.0, 4.0 * kPi / 5.0}},
  };
}

Table1Entry checked_entry(const Table1Row& row) {
  PhaseVector theta0(row.theta0);
  const double residual = flatness_residual(synthesize_coefficients(theta0));
  if (!(residual < kTable1FlatnessTolerance)) {
    throw std::logic_error("table1 entry d=" + std::to_string(row.d) + " v=" +
                           std::to_string(row.variant) + " is not flat: residual " +
                           std::to_string(residual));
  }
  return {row.d, row.variant, std::move(theta0)};
}

}  // namespace

std::string_view family_name(FamilyId id) { return info(id).name; }

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

int family_dimension(FamilyId id) { return info(id).d; }

CoefficientVector family_d3_real(double phi) {
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  // 1 + s c >= 1/2 for every real phi.
  const double den = 1.0 + s * c;
  return CoefficientVector({
      Complex((s + c) * c / den, 0.0),
      Complex((s + c) * s / den, 0.0),
      Complex(-(s * c) / den, 0.0),
  });
}

CoefficientVector family_d3_complex(double phi) {
  const double c = std::cos(phi);
  const double norm = 1.0 / std::sqrt(1.0 + 8.0 * c * c);
  const Complex outer(2.0 * c * norm, 0.0);
  return CoefficientVector({outer, -norm * std::polar(1.0, phi), outer});
}

CoefficientVector family_d4_real(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return CoefficientVector({
      Complex(0.5 * c, 0.0),
      Complex(0.5 * (1.0 + s), 0.0),
      Complex(-0.5 * c, 0.0),
      Complex(0.5 * (1.0 - s), 0.0),
  });
}

CoefficientVector family_d4_complex(double theta) {
  const Complex rot = std::polar(1.0, theta);
  const Complex a0 = 0.5 * (1.0 + rot * std::cos(theta));
  const Complex a1 = 0.5 * rot * std::sin(theta);
  const Complex a2(a1.imag(), -a1.real());  // a1 / i
  return CoefficientVector({a0, a1, a2, -a1});
}

CoefficientVector family_coefficients(FamilyId id, double param_radians) {
  switch (id) {
    case FamilyId::D3Real: return family_d3_real(param_radians);
    case FamilyId::D3Complex: return family_d3_complex(param_radians);
    case FamilyId::D4Real: return family_d4_real(param_radians);
    case FamilyId::D4Complex: return family_d4_complex(param_radians);
  }
  throw std::invalid_argument("unknown FamilyId");
}

Table1Entry table1_phases(int d, int variant) {
  for (const auto& row : table1_rows()) {
    if (row.d == d && row.variant == variant) return checked_entry(row);
  }
  throw std::invalid_argument("table1_phases: no entry for d=" + std::to_string(d) +
                              ", variant=" + std::to_string(variant));
}

std::vector<Table1Entry> table1_all() {
  std::vector<Table1Entry> out;
  for (const auto& row : table1_rows()) out.push_back(checked_entry(row));
  return out;
}

PhaseVector interpolate(const PhaseVector& theta0, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("interpolate: t must lie in [0, 1], got " + std::to_string(t));
  }
  std::vector<double> theta(theta0.values().begin(), theta0.values().end());
  for (double& x : theta) x *= t;
  return PhaseVector(std::move(theta));
}

PhaseVector quadratic_phases(int d) {
  if (d < 2) throw std::invalid_argument("quadratic_phases: d must be >= 2");
  // Reduce the integer numerator mod 2d so phases land in [0, 2 pi) exactly.
  const long long period = 2LL * d;
  std::vector<double> theta(static_cast<std::size_t>(d));
  for (long long a = 0; a < d; ++a) {
    const long long num = (d % 2 == 0) ? (a * a) % period : (a * (a + 1)) % period;
    theta[static_cast<std::size_t>(a)] = kPi * static_cast<double>(num) / static_cast<double>(d);
  }
  return PhaseVector(std::move(theta));
}

}  // namespace eqb
