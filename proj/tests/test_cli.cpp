#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frl/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = frl::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content = "") {
  const auto path = std::filesystem::temp_directory_path() / ("frl_test_" + name);
  if (!content.empty()) std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("lambda-table csv") {
    const auto r = run({"lambda-table", "--dmin", "2", "--dmax", "9", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == "d,lambda_d,bound_new,bound_bck,bound_upper,u_d");
    const double table[] = {0.132, 0.086, 0.058, 0.041, 0.029, 0.021, 0.015, 0.011};
    for (int i = 1; i <= 8; ++i) {
      const auto comma = rows[i].find(',');
      CHECK(std::stoi(rows[i].substr(0, comma)) == i + 1);
      CHECK(std::fabs(std::stod(rows[i].substr(comma + 1)) - table[i - 1]) <= 5e-3);
    }
  }

  TEST_CASE("json output embeds version and config") {
    const auto r = run({"lambda-table", "--dmax", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["version"] == "frl 1.0.0");
    CHECK(doc["config"]["subcommand"] == "lambda-table");
    CHECK(doc["config"]["parameters"]["dmax"] == 4);
    CHECK(doc["config"]["parameters"]["dmin"] == 2);
    CHECK(doc["rows"].size() == 3);
  }

  TEST_CASE("candidate report") {
    const auto r = run({"candidate", "--paper", "--report"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(std::fabs(doc["largest_root"].get<double>() - 0.59354) < 1e-3);
    CHECK(std::fabs(doc["near_double_root"].get<double>() - 0.8990) < 5e-3);
    CHECK(std::fabs(doc["integral"].get<double>()) < 1e-8);
  }

  TEST_CASE("lower-bound endpoint failure") {
    const auto r = run({"lower-bound", "--A", "0.45", "--tau", "0.026"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["result"] == "fails");
    CHECK(doc["margin"].get<double>() < 0.0);
    CHECK(doc["derivatives"].size() == 11);
  }

  TEST_CASE("plot data") {
    const auto r = run({"plot-data", "--function", "candidate", "--from", "0", "--to", "2.5", "--step", "0.005"});
    REQUIRE(r.code == 0);
    const auto all = lines(r.out);
    std::size_t blank = 0;
    while (blank < all.size() && !all[blank].empty()) ++blank;
    REQUIRE(blank == 502);
    for (std::size_t i = 1; i < blank; ++i) {
      const auto comma = all[i].find(',');
      const double x = std::stod(all[i].substr(0, comma));
      if (x > 0.6) CHECK(std::stod(all[i].substr(comma + 1)) >= 0.0);
    }
    CHECK(all[blank + 1] == "kind,x,value");
    CHECK(all[blank + 2].rfind("root,0.5935", 0) == 0);
    CHECK(all[blank + 3].rfind("near_double_root,0.899", 0) == 0);

    const auto u = lines(run({"plot-data", "--function", "upsilon", "--A", "0.45"}).out);
    bool window_min = false;
    for (const auto& line : u) {
      if (line.rfind("local_min,", 0) != 0) continue;
      const double x = std::stod(line.substr(10));
      window_min = window_min || (x >= 1.4 && x <= 1.8);
    }
    CHECK(window_min);

    const auto p = lines(run({"plot-data", "--function", "psi", "--n", "0", "--from", "-3", "--to", "3", "--step", "0.01"}).out);
    REQUIRE(p.size() >= 602);
    double top = -1.0, top_x = 99.0;
    for (std::size_t i = 1; i <= 601; ++i) {
      const auto comma = p[i].find(',');
      const double v = std::stod(p[i].substr(comma + 1));
      CHECK(v == doctest::Approx(std::stod(p[602 - i].substr(p[602 - i].find(',') + 1))));
      if (v > top) {
        top = v;
        top_x = std::stod(p[i].substr(0, comma));
      }
    }
    CHECK(top == doctest::Approx(std::pow(2.0, 0.25)));
    CHECK(std::fabs(top_x) < 1e-12);
  }

  TEST_CASE("sign-search") {
    const auto r = run({"sign-search", "--family", "hermite", "--points", "1,2,3", "--pattern", "+,+,+", "--nmax", "2000"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["match_count"].get<int>() > 0);
    CHECK(doc["config"]["parameters"]["points"] == json::array({1, 2, 3}));
    const auto l = json::parse(run({"sign-search", "--family", "laguerre", "--nu", "2", "--points", "0.5,2"}).out);
    CHECK(l["expected_sign"] == "-");
    CHECK(l["config"]["parameters"]["nmax"] == 2000);
  }

  TEST_CASE("ft-check") {
    const auto doc = json::parse(run({"ft-check", "--paper"}).out);
    CHECK(doc["max_difference"].get<double>() < 1e-6);
  }

  TEST_CASE("validation errors exit with 2") {
    CHECK(run({"lambda-table", "--dmin", "1"}).code == 2);
    CHECK(run({"lambda-table", "--dmin", "9", "--dmax", "3"}).code == 2);
    CHECK(run({"lambda-table", "--format", "xml"}).code == 2);
    CHECK(run({"lower-bound", "--A", "0.7"}).code == 2);
    CHECK(run({"sign-search", "--points", "1,2", "--pattern", "+"}).code == 2);
    CHECK(run({"sign-search", "--family", "laguerre", "--nu", "0.5", "--points", "1"}).code == 2);
    CHECK(run({"candidate"}).code == 2);
    CHECK(run({"candidate", "--paper", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    const auto e = run({"plot-data", "--step", "-1"});
    CHECK(e.code == 2);
    CHECK(e.err.find("step") != std::string::npos);
  }

  TEST_CASE("config files") {
    const auto cfg = temp_file("cfg.json", R"({"schema_version": 1, "subcommand": "lambda-table",
      "parameters": {"dmin": 3, "dmax": 5}, "format": "json"})");
    const auto a = run({"--config", cfg.string()});
    REQUIRE(a.code == 0);
    const auto doc = json::parse(a.out);
    CHECK(doc["rows"].size() == 3);
    CHECK(doc["config"]["parameters"]["format"] == "json");

    // the embedded config reproduces the run byte for byte
    const auto again = temp_file("cfg2.json", doc["config"].dump());
    CHECK(run({"--config", again.string()}).out == a.out);

    const auto unknown = temp_file("cfg3.json", R"({"schema_version": 1, "subcommand": "lambda-table", "colour": 1})");
    CHECK(run({"--config", unknown.string()}).code == 2);
    const auto param = temp_file("cfg4.json", R"({"schema_version": 1, "subcommand": "lambda-table", "parameters": {"dmn": 3}})");
    CHECK(run({"--config", param.string()}).code == 2);
    const auto version = temp_file("cfg5.json", R"({"schema_version": 7, "subcommand": "lambda-table"})");
    CHECK(run({"--config", version.string()}).code == 2);
  }

  TEST_CASE("optimize writes deterministic output and a log") {
    const auto out1 = temp_file("opt1.json");
    const auto out2 = temp_file("opt2.json");
    const auto log = temp_file("opt.jsonl");
    const std::vector<std::string> base = {"optimize", "--paper", "--N", "3", "--min-step", "1e-4", "--seed", "9"};
    auto args = base;
    args.insert(args.end(), {"--output", out1.string(), "--log", log.string()});
    REQUIRE(run(args).code == 0);
    args = base;
    args.insert(args.end(), {"--output", out2.string()});
    REQUIRE(run(args).code == 0);
    const auto slurp = [](const std::filesystem::path& p) {
      std::ifstream in(p);
      return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(slurp(out1) == slurp(out2));
    const auto doc = json::parse(slurp(out1));
    CHECK(doc["objective"].get<double>() <= doc["start_objective"].get<double>());
    CHECK(doc["config"]["parameters"]["seed"] == 9);
    for (const auto& line : lines(slurp(log))) CHECK(json::parse(line).contains("objective"));
  }

  TEST_CASE("coefficient files through the cli") {
    const auto file = temp_file("coeffs.json", R"({"coeffs": ["-113/100", "1/25", "1/3240", "71/359251200"]})");
    const auto doc = json::parse(run({"candidate", "--coeffs", file.string()}).out);
    CHECK(std::fabs(doc["largest_root"].get<double>() - 0.59354) < 1e-3);
    CHECK(run({"candidate", "--coeffs", "/nonexistent/file.json"}).code == 2);
  }
}
