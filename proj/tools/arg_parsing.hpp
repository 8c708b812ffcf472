// Parsers for the textual argument forms accepted by the eqbasis CLI.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqbasis/core_math.hpp"

namespace eqb::cli {

/// Angle expression in radians: a number, or [coef][*]pi[/denom], e.g.
/// "0.5", "pi", "-pi/2", "2pi/5", "4*pi/5". Returns nullopt on malformed input.
std::optional<double> parse_angle(std::string_view text);

/// Comma-separated angle expressions. Throws std::invalid_argument.
std::vector<double> parse_angle_list(std::string_view text);

struct Table1Key {
  int d = 0;
  int variant = 0;
};

/// "d=4,v=1" (v defaults to 0). Throws std::invalid_argument.
Table1Key parse_table1_key(std::string_view text);

/// "re,im;re,im;...". Throws std::invalid_argument.
std::vector<Complex> parse_complex_list(std::string_view text);

/// Shortest round-trip decimal, always with '.' as separator.
std::string format_double(double x);
/// `digits` significant digits, general notation, locale independent.
std::string format_double(double x, int digits);

}  // namespace eqb::cli
