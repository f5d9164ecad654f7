#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hypaskey/errors.hpp"
#include "hypaskey/report.hpp"

using namespace hypaskey;

TEST_CASE("pass means residual within tolerance") {
  CHECK(make_report("a", {}, 1e-9, 1e-8).passed);
  CHECK(make_report("a", {}, 1e-8, 1e-8).passed);
  CHECK_FALSE(make_report("a", {}, 2e-8, 1e-8).passed);
  CHECK_FALSE(make_report("a", {}, std::nan(""), 1e-8).passed);
}

TEST_CASE("log-log slope") {
  CHECK(fit_loglog_slope({1.0, 2.0, 4.0}, {3.0, 12.0, 48.0}) == doctest::Approx(2.0));
  CHECK(std::isnan(fit_loglog_slope({1.0}, {1.0})));
  CHECK_THROWS_AS(fit_loglog_slope({1.0, 2.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(fit_loglog_slope({1.0, 2.0}, {1.0, -1.0}), DomainError);
}

TEST_CASE("convergence study bookkeeping") {
  ConvergenceStudy s;
  s.b = {0.4, 0.2, 0.1};
  s.ratios = {1.0 + 0.04, 1.0 + 0.02, Complex(std::nan(""), 0.0)};
  finalize(s);
  CHECK(s.fitted_order == doctest::Approx(1.0));
  CHECK(s.warning.empty());

  ConvergenceStudy one;
  one.b = {0.3};
  one.ratios = {1.1};
  finalize(one);
  CHECK(std::isnan(one.fitted_order));
  CHECK_FALSE(one.warning.empty());

  ConvergenceStudy bad;
  bad.b = {0.2, 0.3};
  bad.ratios = {1.1, 1.2};
  CHECK_THROWS_AS(finalize(bad), DomainError);

  CHECK(strictly_decreasing({3.0, 2.0, 1.0}));
  CHECK_FALSE(strictly_decreasing({3.0, 3.0}));
}

TEST_CASE("JSONL and CSV writers") {
  std::vector<VerificationReport> rs{
      make_report("x.b", {{"z", Complex(0.5, -0.25)}, {"n", 2.0}}, 1e-3, 1e-6, 12.5, "note, with comma"),
      make_report("x.a", {{"tag", std::string("s")}}, std::numeric_limits<double>::infinity(), 1.0, 3.0)};
  std::ostringstream jl;
  write_jsonl(jl, rs);
  std::istringstream lines(jl.str());
  std::string line;
  std::getline(lines, line);
  const auto j = nlohmann::json::parse(line);
  CHECK(j["check"] == "x.b");
  CHECK(j["params"]["z"]["re"] == 0.5);
  CHECK(j["params"]["z"]["im"] == -0.25);
  CHECK(j["passed"] == false);
  CHECK_FALSE(j.contains("runtime_ms"));
  std::getline(lines, line);
  CHECK(nlohmann::json::parse(line)["residual"] == "inf");

  std::ostringstream csv;
  write_csv(csv, rs);
  CHECK(csv.str().rfind("check,params,residual,tolerance,passed\n", 0) == 0);

  std::ostringstream side;
  write_runtime_sidecar(side, rs);
  CHECK(nlohmann::json::parse(side.str().substr(0, side.str().find('\n')))["runtime_ms"] == 12.5);

  sort_canonical(rs);
  CHECK(rs.front().check == "x.a");
}

TEST_CASE("study writers") {
  ConvergenceStudy s;
  s.target = "M";
  s.b = {0.5, 0.25};
  s.ratios = {1.1, 1.05};
  finalize(s);
  std::ostringstream csv;
  write_csv(csv, s);
  const auto pos = csv.str().find("# fitted_order,");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(csv.str().substr(pos + 15)) == doctest::Approx(1.0));
  std::ostringstream js;
  write_json(js, s);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["rows"].size() == 2);
  CHECK(j["fitted_order"].get<double>() == doctest::Approx(1.0));
}
