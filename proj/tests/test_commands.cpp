#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "barrier/commands.hpp"

using barrier::ConfigError;
using barrier::RunConfig;

TEST_CASE("set rejects unknown keys and bad values") {
  RunConfig rc;
  CHECK_THROWS_AS(rc.set("no_such_key", "1"), ConfigError);
  CHECK_THROWS_AS(rc.set("v0", "not-a-number"), ConfigError);
  rc.set("v0", "2.5");
  CHECK(rc.phys.v0 == 2.5);
  rc.set("family", "tilde");
  CHECK(rc.family == "tilde");
  // enum-like values are vetted by validate()
  rc.set("format", "xml");
  CHECK_THROWS_AS(rc.validate(), ConfigError);
  rc.set("format", "json");
  rc.set("family", "imaginary");
  CHECK_THROWS_AS(rc.validate(), ConfigError);
}

TEST_CASE("validate enforces grid sizes and physical invariants") {
  RunConfig rc;
  rc.validate();
  rc.set("n_x", "8");  // below the minimum of 16
  CHECK_THROWS_AS(rc.validate(), ConfigError);
  rc.set("n_x", "101");
  rc.set("a", "2");
  rc.set("b", "1");  // b <= a
  CHECK_THROWS_AS(rc.validate(), ConfigError);
}

TEST_CASE("config files use key=value lines with # comments") {
  const std::string path = "test_config_tmp.cfg";
  {
    std::ofstream f(path);
    f << "# physical setup\n"
      << "v0 = 7.5\n"
      << "n_k=33\n"
      << "\n"
      << "family=minus  # trailing comment\n";
  }
  const RunConfig rc = barrier::load_config(path);
  std::remove(path.c_str());
  CHECK(rc.phys.v0 == 7.5);
  CHECK(rc.n_k == 33);
  CHECK(rc.family == "minus");
  CHECK_THROWS_AS(barrier::load_config("does_not_exist.cfg"), ConfigError);
}

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(barrier::format_double(1.0) == "1");
  const std::string s = barrier::format_double(1.0 / 3.0);
  CHECK(s == "0.33333333333333331");
}

TEST_CASE("csv output carries config header, titles, columns, and rows") {
  RunConfig rc;
  rc.set("k_lo", "1");
  rc.set("k_hi", "2");
  rc.set("n_k", "17");
  const auto t = barrier::cmd_coeffs(rc);
  const std::string csv = barrier::table_to_csv(t, rc);
  CHECK(csv.find("# m=1 hbar=1 v0=10 a=0 b=1") == 0);
  CHECK(csv.find("# quantity:") != std::string::npos);
  CHECK(csv.find("k,re_t,im_t") != std::string::npos);
  CHECK(csv.find("\r") == std::string::npos);  // LF only
  // one line per grid node plus headers
  const size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows >= 17 + 3);
}

TEST_CASE("json output mirrors the table") {
  RunConfig rc;
  rc.set("n_k", "17");
  const auto t = barrier::cmd_coeffs(rc);
  const auto j = nlohmann::json::parse(barrier::table_to_json(t, rc));
  CHECK(j.contains("config"));
  CHECK(j["config"]["v0"] == 10.0);
  CHECK(j["columns"].size() == t.columns.size());
  CHECK(j["rows"].size() == t.rows.size());
}

TEST_CASE("the verify report serializes checks with anchors") {
  RunConfig rc;
  barrier::VerifyOptions opts;
  const auto report = barrier::cmd_verify(rc, "coeffs", opts);
  CHECK(report.all_pass);
  const auto j = nlohmann::json::parse(barrier::report_to_json(report, rc));
  CHECK(j["checks"].size() == report.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("value"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("pass"));
  }
}

TEST_CASE("a tolerance override changes one check's verdict") {
  RunConfig rc;
  barrier::VerifyOptions opts;
  opts.tol_overrides["amplitude-unitarity"] = 1e-30;  // impossible bar
  const auto report = barrier::cmd_verify(rc, "coeffs", opts);
  CHECK_FALSE(report.all_pass);
  int failed = 0;
  for (const auto& c : report.checks)
    if (!c.pass) {
      ++failed;
      CHECK(c.name == "amplitude-unitarity");
      CHECK(c.tolerance == 1e-30);
    }
  CHECK(failed == 1);
}

TEST_CASE("an injected amplitude fault is caught by the checks") {
  RunConfig rc;
  barrier::VerifyOptions opts;
  opts.coeff_fault = 1e-6;
  const auto report = barrier::cmd_verify(rc, "coeffs", opts);
  CHECK_FALSE(report.all_pass);
}

TEST_CASE("unknown suites are rejected") {
  RunConfig rc;
  CHECK_THROWS_AS(barrier::cmd_verify(rc, "nonsense", {}),
                  std::invalid_argument);
}
