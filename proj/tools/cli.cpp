#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "arg_parsing.hpp"
#include "eqbasis/basis.hpp"
#include "eqbasis/families.hpp"
#include "eqbasis/search.hpp"

#ifndef EQBASIS_VERSION
#define EQBASIS_VERSION "unknown"
#endif

namespace eqb::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kDegToRad = kPi / 180.0;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string output;
  std::string format;  // empty: command default
  bool quiet = false;
};

// Exactly one of these selects the coefficient vector.
struct SourceOptions {
  std::optional<int> d;
  std::string theta;
  std::string family;
  std::optional<double> param_deg;
  std::string table1;
  std::string coeffs;
};

struct Resolved {
  CoefficientVector a;
  std::optional<PhaseVector> theta;
  ordered_json source;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--d", src.d, "Qudit dimension (checked against the source)");
  cmd->add_option("--theta", src.theta, "Comma-separated phases in radians, e.g. 0,0,0,pi");
  cmd->add_option("--family", src.family, "d3-real | d3-complex | d4-real | d4-complex");
  cmd->add_option("--param-deg", src.param_deg, "Family parameter in degrees");
  cmd->add_option("--table1", src.table1, "Tabulated endpoint phases, e.g. d=4,v=0");
}

void check_dimension(const SourceOptions& src, int d) {
  if (src.d && *src.d != d) {
    throw std::invalid_argument("--d " + std::to_string(*src.d) + " does not match source dimension " +
                                std::to_string(d));
  }
}

ordered_json phases_json(const PhaseVector& theta) {
  ordered_json arr = ordered_json::array();
  for (double t : theta.values()) arr.push_back(t);
  return arr;
}

ordered_json coefficients_json(const CoefficientVector& a) {
  ordered_json arr = ordered_json::array();
  for (const auto& z : a.values()) arr.push_back({z.real(), z.imag()});
  return arr;
}

Resolved resolve_source(const SourceOptions& src) {
  const int chosen = static_cast<int>(!src.theta.empty()) + static_cast<int>(!src.family.empty()) +
                     static_cast<int>(!src.table1.empty()) + static_cast<int>(!src.coeffs.empty());
  if (chosen != 1) {
    throw std::invalid_argument(
        "specify exactly one of --theta, --family, --table1, --coeffs");
  }
  if (src.param_deg && src.family.empty()) {
    throw std::invalid_argument("--param-deg requires --family");
  }

  if (!src.theta.empty()) {
    PhaseVector theta(parse_angle_list(src.theta));
    check_dimension(src, theta.dimension());
    ordered_json source{{"kind", "theta"}, {"theta", phases_json(theta)}};
    return {synthesize_coefficients(theta), theta, std::move(source)};
  }
  if (!src.family.empty()) {
    const auto id = parse_family(src.family);
    if (!id) throw std::invalid_argument("unknown family '" + src.family + "'");
    if (!src.param_deg) throw std::invalid_argument("--family requires --param-deg");
    if (!std::isfinite(*src.param_deg)) throw std::invalid_argument("--param-deg must be finite");
    check_dimension(src, family_dimension(*id));
    ordered_json source{{"kind", "family"}, {"family", src.family}, {"param_deg", *src.param_deg}};
    return {family_coefficients(*id, *src.param_deg * kDegToRad), std::nullopt, std::move(source)};
  }
  if (!src.table1.empty()) {
    const auto key = parse_table1_key(src.table1);
    auto entry = table1_phases(key.d, key.variant);
    check_dimension(src, entry.d);
    ordered_json source{{"kind", "table1"},
                        {"d", entry.d},
                        {"variant", entry.variant},
                        {"theta", phases_json(entry.theta0)}};
    return {synthesize_coefficients(entry.theta0), entry.theta0, std::move(source)};
  }
  auto raw = parse_complex_list(src.coeffs);
  auto a = CoefficientVector::normalized(std::move(raw));
  check_dimension(src, a.dimension());
  ordered_json source{{"kind", "coeffs"}, {"normalized", coefficients_json(a)}};
  return {std::move(a), std::nullopt, std::move(source)};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

// Writes `content` to --output (plus its manifest) or to `out`.
void emit(const GlobalOptions& g, const std::string& command, const ordered_json& config,
          const std::string& content, std::ostream& out) {
  if (g.output.empty()) {
    out << content;
    return;
  }
  write_file(g.output, content);
  ordered_json manifest;
  manifest["command"] = command;
  manifest["config"] = config;
  manifest["versions"] = std::string("eqbasis ") + EQBASIS_VERSION + "; compiler " + __VERSION__;
  manifest["timestamp"] = utc_timestamp();
  write_file(g.output + ".manifest.json", manifest.dump(2) + "\n");
}

std::string resolve_format(const GlobalOptions& g, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
  const std::string fmt = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed) {
    if (fmt == a) return fmt;
  }
  throw std::invalid_argument("format '" + fmt + "' not supported by this command");
}

ordered_json source_config(const SourceOptions& src) {
  ordered_json c = ordered_json::object();
  if (src.d) c["d"] = *src.d;
  if (!src.theta.empty()) c["theta"] = src.theta;
  if (!src.family.empty()) c["family"] = src.family;
  if (src.param_deg) c["param_deg"] = *src.param_deg;
  if (!src.table1.empty()) c["table1"] = src.table1;
  if (!src.coeffs.empty()) c["coeffs"] = src.coeffs;
  return c;
}

int cmd_construct(const GlobalOptions& g, const SourceOptions& src, std::ostream& out) {
  const auto fmt = resolve_format(g, "json", {"json", "csv"});
  const Resolved r = resolve_source(src);
  const int d = r.a.dimension();
  const double e = entanglement(r.a).value();

  std::string content;
  if (fmt == "json") {
    ordered_json doc;
    doc["d"] = d;
    doc["source"] = r.source;
    doc["coefficients"] = coefficients_json(r.a);
    doc["entanglement"] = e;
    ordered_json states = ordered_json::array();
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        const StateVector s = build_state(r.a, {m, n});
        for (int i = 0; i < d; ++i) {
          const int j = (i + m) % d;
          const int k = (i + m + n) % d;
          states.push_back({m, n, j, k, s(j, k).real(), s(j, k).imag()});
        }
      }
    }
    doc["states"] = std::move(states);
    content = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "# d=" << d << "\n";
    os << "# entanglement=" << format_double(e, 15) << "\n";
    for (int k = 0; k < d; ++k) {
      const auto& z = r.a[static_cast<std::size_t>(k)];
      os << "# a[" << k << "]=" << format_double(z.real()) << "," << format_double(z.imag()) << "\n";
    }
    os << "m,n,j,k,re,im\n";
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        const StateVector s = build_state(r.a, {m, n});
        for (int i = 0; i < d; ++i) {
          const int j = (i + m) % d;
          const int k = (i + m + n) % d;
          os << m << ',' << n << ',' << j << ',' << k << ',' << format_double(s(j, k).real())
             << ',' << format_double(s(j, k).imag()) << "\n";
        }
      }
    }
    content = os.str();
  }
  auto config = source_config(src);
  config["format"] = fmt;
  emit(g, "construct", config, content, out);
  return kExitOk;
}

struct CurveOptions {
  std::string family;
  std::string table1;
  std::string theta;
  bool interpolate = false;
  std::optional<int> d;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<double> step;
};

int cmd_curve(const GlobalOptions& g, const CurveOptions& c, std::ostream& out, std::ostream& err) {
  const auto fmt = resolve_format(g, "csv", {"csv", "json"});
  const int chosen = static_cast<int>(!c.family.empty()) + static_cast<int>(!c.table1.empty()) +
                     static_cast<int>(!c.theta.empty());
  if (chosen != 1) throw std::invalid_argument("specify exactly one of --family, --table1, --theta");

  std::optional<FamilyId> family;
  std::optional<PhaseVector> theta0;
  if (!c.family.empty()) {
    family = parse_family(c.family);
    if (!family) throw std::invalid_argument("unknown family '" + c.family + "'");
    if (c.interpolate) throw std::invalid_argument("--interpolate applies to --table1 or --theta");
    if (c.d && *c.d != family_dimension(*family)) throw std::invalid_argument("--d does not match family");
  } else {
    if (!c.interpolate) throw std::invalid_argument("--table1/--theta curves need --interpolate");
    if (!c.table1.empty()) {
      const auto key = parse_table1_key(c.table1);
      theta0 = table1_phases(key.d, key.variant).theta0;
    } else {
      theta0 = PhaseVector(parse_angle_list(c.theta));
    }
    if (c.d && *c.d != theta0->dimension()) throw std::invalid_argument("--d does not match phases");
  }

  const double lo_bound = 0.0;
  const double hi_bound = family ? 360.0 : 1.0;
  const double from = c.from.value_or(0.0);
  const double to = c.to.value_or(family ? 180.0 : 1.0);
  const double step = c.step.value_or(family ? 0.25 : 0.001);
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("--step must be > 0");
  if (!(from >= lo_bound && to <= hi_bound && from <= to)) {
    throw std::invalid_argument("range must satisfy " + format_double(lo_bound) + " <= from <= to <= " +
                                format_double(hi_bound));
  }
  const auto count = static_cast<long long>(std::floor((to - from) / step + 1e-9)) + 1;

  std::vector<std::pair<double, double>> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    const double p = from + static_cast<double>(i) * step;
    const CoefficientVector a = family ? family_coefficients(*family, p * kDegToRad)
                                       : synthesize_coefficients(interpolate(*theta0, std::min(p, 1.0)));
    rows.emplace_back(p, entanglement(a).value());
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].second > rows[best].second) best = i;
  }

  std::string content;
  if (fmt == "csv") {
    std::ostringstream os;
    os << "param_deg,entanglement\n";
    for (const auto& [p, e] : rows) os << format_double(p) << ',' << format_double(e, 15) << "\n";
    content = os.str();
  } else {
    ordered_json doc;
    doc["param"] = family ? "degrees" : "t";
    ordered_json arr = ordered_json::array();
    for (const auto& [p, e] : rows) arr.push_back({p, e});
    doc["rows"] = std::move(arr);
    content = doc.dump(2) + "\n";
  }

  ordered_json config = ordered_json::object();
  if (family) config["family"] = c.family;
  if (!c.table1.empty()) config["table1"] = c.table1;
  if (!c.theta.empty()) config["theta"] = c.theta;
  config["interpolate"] = c.interpolate;
  config["from"] = from;
  config["to"] = to;
  config["step"] = step;
  config["format"] = fmt;
  emit(g, "curve", config, content, out);

  ordered_json summary;
  summary["max_entanglement"] = rows[best].second;
  summary["argmax"] = rows[best].first;
  summary["rows"] = rows.size();
  // With data on stdout the summary moves to stderr to keep the CSV clean.
  if (!g.quiet) (g.output.empty() ? err : out) << summary.dump() << "\n";
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const SourceOptions& src, std::ostream& out) {
  resolve_format(g, "json", {"json"});
  const Resolved r = resolve_source(src);
  const Certificate cert = certify(r.a);

  ordered_json doc;
  doc["residual"] = cert.residual;
  doc["gram_max_offdiag"] = cert.gram.max_offdiag;
  doc["gram_max_diag_dev"] = cert.gram.max_diag_dev;
  doc["entanglement"] = cert.entanglement.value();
  doc["maximal"] = cert.maximal();
  const std::string content = doc.dump(2) + "\n";

  emit(g, "verify", source_config(src), content, out);
  if (!g.output.empty() && !g.quiet) out << content;
  return cert.gram_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_search(const GlobalOptions& g, const SearchConfig& cfg, std::ostream& out) {
  resolve_format(g, "json", {"json"});
  const SearchResult res = alternating_projection_search(cfg);

  ordered_json doc;
  doc["d"] = cfg.d;
  doc["theta"] = phases_json(res.theta);
  doc["residual"] = res.residual;
  doc["iterations"] = res.iterations;
  doc["converged"] = res.converged;
  doc["restart_index"] = res.restart_index;
  const std::string content = doc.dump(2) + "\n";

  ordered_json config;
  config["d"] = cfg.d;
  config["seed"] = cfg.rng_seed;
  config["restarts"] = cfg.restarts;
  config["tol"] = cfg.residual_tol;
  config["max_iters"] = cfg.max_iters;
  emit(g, "search", config, content, out);
  if (!g.output.empty() && !g.quiet) out << content;
  return res.converged ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equi-entangled orthonormal bases for two qudits"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--output,-o", g.output, "Output file (a .manifest.json is written next to it)");
  app.add_option("--format", g.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--quiet,-q", g.quiet, "Suppress informational output");

  SourceOptions construct_src;
  auto* construct = app.add_subcommand("construct", "Build all d^2 basis states");
  add_source_options(construct, construct_src);
  construct->add_option("--coeffs", construct_src.coeffs, "Raw coefficients 're,im;re,im;...' (normalized)");

  CurveOptions curve_opts;
  auto* curve = app.add_subcommand("curve", "Entanglement along a family or interpolation path");
  curve->add_option("--family", curve_opts.family, "d3-real | d3-complex | d4-real | d4-complex");
  curve->add_option("--table1", curve_opts.table1, "Tabulated endpoint phases, e.g. d=4,v=0");
  curve->add_option("--theta", curve_opts.theta, "Endpoint phases in radians");
  curve->add_flag("--interpolate", curve_opts.interpolate, "Scan t in theta = t * theta0");
  curve->add_option("--d", curve_opts.d, "Dimension (checked)");
  curve->add_option("--from", curve_opts.from, "Range start (degrees, or t)");
  curve->add_option("--to", curve_opts.to, "Range end, inclusive when on the grid");
  curve->add_option("--step", curve_opts.step, "Grid step");

  SourceOptions verify_src;
  auto* verify = app.add_subcommand("verify", "Orthonormality and maximal-entanglement certificate");
  add_source_options(verify, verify_src);
  verify->add_option("--coeffs", verify_src.coeffs, "Raw coefficients 're,im;re,im;...' (normalized)");

  SearchConfig search_cfg;
  auto* search = app.add_subcommand("search", "Alternating-projection search for flat phases");
  search->add_option("--d", search_cfg.d, "Dimension")->required();
  search->add_option("--seed", search_cfg.rng_seed, "Generator seed");
  search->add_option("--restarts", search_cfg.restarts, "Random restarts");
  search->add_option("--tol", search_cfg.residual_tol, "Flatness residual tolerance");
  search->add_option("--max-iters", search_cfg.max_iters, "Projection rounds per restart");
  search->add_option("--workers", search_cfg.workers, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }

  try {
    if (construct->parsed()) return cmd_construct(g, construct_src, out);
    if (curve->parsed()) return cmd_curve(g, curve_opts, out, err);
    if (verify->parsed()) return cmd_verify(g, verify_src, out);
    if (search->parsed()) {
      search_cfg.validate();
      return cmd_search(g, search_cfg, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}

}  // namespace eqb::cli
