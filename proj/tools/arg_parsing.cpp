#include "arg_parsing.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace eqb::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

// Consumes a leading unsigned decimal number; nullopt if none is present.
std::optional<double> take_number(std::string_view& s) {
  if (s.empty() || s.front() == '-') return std::nullopt;
  double value = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(ptr - first));
  return value;
}

std::optional<double> parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto v = take_number(text);
  if (!v || !text.empty() || !std::isfinite(*v)) return std::nullopt;
  return v;
}

std::optional<int> parse_int(std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<double> parse_angle(std::string_view text) {
  std::string_view s = trim(text);
  double sign = 1.0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  if (s.empty() || s.front() == '-' || s.front() == '+') return std::nullopt;

  const auto coef = take_number(s);
  bool has_pi = false;
  if (!s.empty() && s.front() == '*') {
    if (!coef) return std::nullopt;
    s.remove_prefix(1);
    if (!s.starts_with("pi")) return std::nullopt;
  }
  if (s.starts_with("pi")) {
    has_pi = true;
    s.remove_prefix(2);
  }
  if (!coef && !has_pi) return std::nullopt;

  double value = sign * coef.value_or(1.0) * (has_pi ? kPi : 1.0);
  if (!s.empty() && s.front() == '/') {
    s.remove_prefix(1);
    const auto denom = take_number(s);
    if (!denom || *denom == 0.0) return std::nullopt;
    value /= *denom;
  }
  if (!s.empty() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::vector<double> parse_angle_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) {
    const auto v = parse_angle(part);
    if (!v) throw std::invalid_argument("bad angle '" + std::string(part) + "'");
    out.push_back(*v);
  }
  return out;
}

Table1Key parse_table1_key(std::string_view text) {
  Table1Key key;
  bool have_d = false;
  for (auto part : split(text, ',')) {
    part = trim(part);
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("bad table1 key '" + std::string(text) + "' (expected d=N,v=M)");
    }
    const auto name = trim(part.substr(0, eq));
    const auto value = parse_int(part.substr(eq + 1));
    if (!value) throw std::invalid_argument("bad table1 value in '" + std::string(part) + "'");
    if (name == "d") {
      key.d = *value;
      have_d = true;
    } else if (name == "v") {
      key.variant = *value;
    } else {
      throw std::invalid_argument("unknown table1 field '" + std::string(name) + "'");
    }
  }
  if (!have_d) throw std::invalid_argument("table1 key needs d=N");
  return key;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  for (auto entry : split(text, ';')) {
    const auto parts = split(entry, ',');
    if (parts.size() != 2) {
      throw std::invalid_argument("bad complex entry '" + std::string(entry) + "' (expected re,im)");
    }
    // Allow a leading minus on either component.
    auto signed_real = [](std::string_view s) -> std::optional<double> {
      s = trim(s);
      double sign = 1.0;
      if (!s.empty() && s.front() == '-') {
        sign = -1.0;
        s.remove_prefix(1);
      }
      auto v = parse_real(s);
      if (!v) return std::nullopt;
      return sign * *v;
    };
    const auto re = signed_real(parts[0]);
    const auto im = signed_real(parts[1]);
    if (!re || !im) throw std::invalid_argument("bad complex entry '" + std::string(entry) + "'");
    out.emplace_back(*re, *im);
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return {buf, ptr};
}

std::string format_double(double x, int digits) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return {buf, ptr};
}

}  // namespace eqb::cli
