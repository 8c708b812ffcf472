#include "cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "arg_parsing.hpp"
#include "eqbasis/core_math.hpp"

namespace fs = std::filesystem;
using eqb::kPi;
using eqb::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("eqbasis_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(arg_parsing, angles) {
  using eqb::cli::parse_angle;
  EXPECT_EQ(parse_angle("0"), 0.0);
  EXPECT_EQ(parse_angle("pi"), kPi);
  EXPECT_EQ(parse_angle("-pi/2"), -kPi / 2);
  EXPECT_EQ(parse_angle("2pi/5"), 2 * kPi / 5);
  EXPECT_EQ(parse_angle("4*pi/5"), 4 * kPi / 5);
  EXPECT_EQ(parse_angle(" 1.5 "), 1.5);
  EXPECT_EQ(parse_angle("1e-3"), 1e-3);
  for (const char* bad : {"", "pie", "2*", "*pi", "pi/0", "--1", "nan", "inf", "1/", "x"}) {
    EXPECT_FALSE(parse_angle(bad).has_value()) << bad;
  }
  ASSERT_THROW(eqb::cli::parse_angle_list("0,,1"), std::invalid_argument);
}

TEST(arg_parsing, table1_keys_and_coefficients) {
  const auto k = eqb::cli::parse_table1_key("d=4,v=1");
  EXPECT_EQ(k.d, 4);
  EXPECT_EQ(k.variant, 1);
  EXPECT_EQ(eqb::cli::parse_table1_key("d=5").variant, 0);
  ASSERT_THROW(eqb::cli::parse_table1_key("v=1"), std::invalid_argument);
  ASSERT_THROW(eqb::cli::parse_table1_key("d=x"), std::invalid_argument);
  ASSERT_THROW(eqb::cli::parse_table1_key("q=1,d=2"), std::invalid_argument);

  const auto c = eqb::cli::parse_complex_list("0.7071,0;-0.5,-1e-3");
  ASSERT_EQ(c.size(), 2U);
  EXPECT_EQ(c[1], eqb::Complex(-0.5, -1e-3));
  ASSERT_THROW(eqb::cli::parse_complex_list("1,2,3"), std::invalid_argument);
  ASSERT_THROW(eqb::cli::parse_complex_list("1;2"), std::invalid_argument);
}

TEST(arg_parsing, number_formatting_is_plain) {
  EXPECT_EQ(eqb::cli::format_double(0.25), "0.25");
  EXPECT_EQ(eqb::cli::format_double(45.0), "45");
  EXPECT_EQ(eqb::cli::format_double(1.0 / 3.0, 15), "0.333333333333333");
}

TEST_F(CliTest, construct_d3_complex_maximal) {
  const auto out = path("d3.json");
  const auto r = run({"construct", "--d", "3", "--family", "d3-complex", "--param-deg", "60",
                      "--format", "json", "--output", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(doc["d"], 3);
  EXPECT_NEAR(doc["entanglement"].get<double>(), 1.0, 1e-12);
  ASSERT_EQ(doc["states"].size(), 27U);
  // |psi_01> has amplitude -N e^{i phi} on |1,2>.
  const double n = 1.0 / std::sqrt(3.0);
  bool found = false;
  for (const auto& row : doc["states"]) {
    if (row[0] == 0 && row[1] == 1 && row[2] == 1 && row[3] == 2) {
      EXPECT_NEAR(row[4].get<double>(), -n * std::cos(kPi / 3), 1e-12);
      EXPECT_NEAR(row[5].get<double>(), -n * std::sin(kPi / 3), 1e-12);
      found = true;
    }
  }
  EXPECT_TRUE(found);

  const auto manifest = nlohmann::ordered_json::parse(slurp(out + ".manifest.json"));
  std::vector<std::string> keys;
  for (const auto& [key, _] : manifest.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "config", "versions", "timestamp"}));
  EXPECT_EQ(manifest["command"], "construct");
  EXPECT_EQ(manifest["timestamp"].get<std::string>().back(), 'Z');
}

TEST_F(CliTest, construct_theta_to_stdout) {
  const auto r = run({"construct", "--d", "4", "--theta", "0,0,0,pi"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& a = doc["coefficients"];
  EXPECT_EQ(a[0][0].get<double>(), 0.5);
  EXPECT_EQ(a[1][1].get<double>(), 0.5);
  EXPECT_EQ(a[2][0].get<double>(), 0.5);
  EXPECT_EQ(a[3][1].get<double>(), -0.5);
}

TEST_F(CliTest, construct_product_basis_csv) {
  const auto out = path("p.csv");
  const auto r = run({"construct", "--d", "5", "--theta", "0,0,0,0,0", "--format", "csv", "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto text = slurp(out);
  const auto e_at = text.find("# entanglement=");
  ASSERT_NE(e_at, std::string::npos);
  EXPECT_LT(std::stod(text.substr(e_at + 15)), 1e-12);
  EXPECT_NE(text.find("m,n,j,k,re,im\n"), std::string::npos);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  // 5 comment lines for a, 2 more for d and E, header, 125 rows.
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2 + 5 + 1 + 125);
}

TEST_F(CliTest, construct_argument_errors) {
  EXPECT_EQ(run({"construct"}).code, 2);
  EXPECT_EQ(run({"construct", "--theta", "0,1", "--family", "d3-real", "--param-deg", "1"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "d3-real"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "d9-real", "--param-deg", "1"}).code, 2);
  EXPECT_EQ(run({"construct", "--d", "4", "--family", "d3-real", "--param-deg", "1"}).code, 2);
  EXPECT_EQ(run({"construct", "--theta", "0,bogus"}).code, 2);
  EXPECT_EQ(run({"construct", "--table1", "d=7"}).code, 2);
  EXPECT_EQ(run({"construct", "--theta", "0,1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, construct_io_failure) {
  const auto r = run({"construct", "--theta", "0,1", "-o", path("missing/dir/out.json")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST_F(CliTest, curve_d3_real_maximum) {
  const auto out = path("d3r.csv");
  const auto r = run({"curve", "--family", "d3-real", "--from", "0", "--to", "180", "--step", "0.25",
                      "--output", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto summary = nlohmann::json::parse(r.out);
  EXPECT_NEAR(summary["max_entanglement"].get<double>(), 0.87, 0.01);
  EXPECT_EQ(summary["argmax"].get<double>(), 45.0);
  EXPECT_EQ(summary["rows"], 721);

  std::istringstream lines(slurp(out));
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "param_deg,entanglement");
  double prev = -1.0;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    const double p = std::stod(line.substr(0, comma));
    const double e = std::stod(line.substr(comma + 1));
    EXPECT_GT(p, prev);
    EXPECT_GE(e, 0.0);
    EXPECT_LE(e, 1.0);
    prev = p;
    ++rows;
  }
  EXPECT_EQ(rows, 721);
  EXPECT_EQ(prev, 180.0);
}

TEST_F(CliTest, curve_d4_complex_matches_closed_form) {
  const auto out = path("d4c.csv");
  ASSERT_EQ(run({"curve", "--family", "d4-complex", "--from", "0", "--to", "180", "--step", "0.25",
                 "-q", "-o", out})
                .code,
            0);
  std::istringstream lines(slurp(out));
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    const double t = std::stod(line.substr(0, comma)) * kPi / 180.0;
    const double e = std::stod(line.substr(comma + 1));
    const double l0 = (1 + 3 * std::cos(t) * std::cos(t)) / 4;
    const double l1 = std::sin(t) * std::sin(t) / 4;
    double want = -l0 * std::log(l0) / std::log(4.0);
    if (l1 > 0) want -= 3 * l1 * std::log(l1) / std::log(4.0);
    // 15 significant digits in the file.
    EXPECT_NEAR(e, want, 1e-12) << line;
  }
}

TEST_F(CliTest, curve_interpolation_endpoints) {
  const auto out = path("t.csv");
  const auto r = run({"curve", "--table1", "d=4,v=0", "--interpolate", "--from", "0", "--to", "1",
                      "--step", "0.001", "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto text = slurp(out);
  EXPECT_EQ(text.rfind("param_deg,entanglement\n0,0\n", 0), 0U);
  EXPECT_NE(text.find("\n1,1\n"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1002);
}

TEST_F(CliTest, curve_stdout_keeps_csv_clean) {
  const auto r = run({"curve", "--family", "d4-real", "--from", "0", "--to", "1", "--step", "0.5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("param_deg,entanglement\n", 0), 0U);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  EXPECT_NE(r.err.find("max_entanglement"), std::string::npos);
}

TEST_F(CliTest, curve_argument_errors) {
  EXPECT_EQ(run({"curve", "--family", "d3-real", "--step", "0"}).code, 2);
  EXPECT_EQ(run({"curve", "--family", "d3-real", "--from", "10", "--to", "5"}).code, 2);
  EXPECT_EQ(run({"curve", "--family", "d3-real", "--to", "400"}).code, 2);
  EXPECT_EQ(run({"curve", "--table1", "d=4,v=0"}).code, 2);
  EXPECT_EQ(run({"curve", "--table1", "d=4,v=0", "--interpolate", "--to", "2"}).code, 2);
  EXPECT_EQ(run({"curve", "--family", "d3-real", "--interpolate"}).code, 2);
  EXPECT_EQ(run({"curve"}).code, 2);
}

TEST_F(CliTest, verify_table1_d5_is_maximal) {
  const auto r = run({"verify", "--table1", "d=5,v=0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [key, _] : doc.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"residual", "gram_max_offdiag", "gram_max_diag_dev",
                                            "entanglement", "maximal"}));
  EXPECT_TRUE(doc["maximal"].get<bool>());
}

TEST_F(CliTest, verify_d3_real_not_maximal) {
  const auto r = run({"verify", "--d", "3", "--family", "d3-real", "--param-deg", "45"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_FALSE(doc["maximal"].get<bool>());
  EXPECT_NEAR(doc["entanglement"].get<double>(), 0.8783471047618534, 1e-12);
}

TEST_F(CliTest, verify_raw_coefficients_fail_gram) {
  const auto r = run({"verify", "--d", "2", "--coeffs", "0.7071,0;0.7071,0"});
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["gram_max_offdiag"].get<double>(), 1.0, 1e-12);
  EXPECT_FALSE(doc["maximal"].get<bool>());
  EXPECT_EQ(run({"verify", "--theta", "0,1", "--format", "csv"}).code, 2);
}

TEST_F(CliTest, search_converges_and_reports) {
  const auto out = path("s.json");
  const auto r = run({"search", "--d", "5", "--seed", "1", "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(slurp(out));
  EXPECT_TRUE(doc["converged"].get<bool>());
  EXPECT_LT(doc["residual"].get<double>(), 1e-10);
  EXPECT_EQ(doc["theta"].size(), 5U);
  EXPECT_EQ(doc["theta"][0].get<double>(), 0.0);
  EXPECT_TRUE(fs::exists(out + ".manifest.json"));
}

TEST_F(CliTest, search_d2_and_starvation) {
  const auto r = run({"search", "--d", "2", "--seed", "7"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(std::abs(std::cos(doc["theta"][1].get<double>())), 0.0, 1e-9);

  const auto starved = run({"search", "--d", "9", "--max-iters", "1", "--restarts", "1"});
  EXPECT_EQ(starved.code, 1);
  EXPECT_FALSE(nlohmann::json::parse(starved.out)["converged"].get<bool>());

  EXPECT_EQ(run({"search"}).code, 2);
  EXPECT_EQ(run({"search", "--d", "1"}).code, 2);
  EXPECT_EQ(run({"search", "--d", "3", "--tol", "-1"}).code, 2);
}

TEST_F(CliTest, repeated_runs_are_byte_identical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "--table1", "d=5,v=0"},
           {"curve", "--family", "d3-complex", "--step", "1"},
           {"search", "--d", "6", "--seed", "2"},
           {"verify", "--family", "d4-complex", "--param-deg", "30"}}) {
    auto a = args;
    auto b = args;
    a.insert(a.end(), {"-q", "-o", path("a.out")});
    b.insert(b.end(), {"-q", "-o", path("b.out")});
    ASSERT_EQ(run(a).code, 0);
    ASSERT_EQ(run(b).code, 0);
    EXPECT_EQ(slurp(path("a.out")), slurp(path("b.out"))) << args[0];
  }
}
