#include "frl/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frl/acceptance.hpp"
#include "frl/eigenfunction.hpp"
#include "frl/errors.hpp"
#include "frl/higherdim.hpp"
#include "frl/lowerbound1d.hpp"
#include "frl/optimizer.hpp"
#include "frl/quadrature.hpp"
#include "frl/signpatterns.hpp"
#include "frl/specfun.hpp"

namespace frl {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<double> as_number(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

ordered_json scalar(const std::string& s) {
  if (const auto v = as_number(s)) {
    if (std::floor(*v) == *v && s.find_first_of(".eE") == std::string::npos) return static_cast<long long>(*v);
    return *v;
  }
  return s;
}

// Parameters actually in effect for a subcommand, in declaration order.
ordered_json effective_config(const CLI::App& sub) {
  ordered_json params = ordered_json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const auto& names = opt->get_lnames();
    if (names.empty() || names[0] == "help" || names[0] == "output" || names[0] == "log") continue;
    const std::string& name = names[0];
    if (opt->get_expected_min() == 0) {
      params[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      const auto& results = opt->results();
      if (opt->get_expected_max() > 1) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) arr.push_back(scalar(r));
        params[name] = arr;
      } else {
        params[name] = scalar(results.back());
      }
    } else if (!opt->get_default_str().empty()) {
      params[name] = scalar(opt->get_default_str());
    }
  }
  ordered_json config;
  config["schema_version"] = kConfigSchemaVersion;
  config["subcommand"] = sub.get_name();
  config["parameters"] = params;
  return config;
}

ordered_json envelope(const CLI::App& sub) {
  ordered_json doc;
  doc["version"] = kVersion;
  doc["config"] = effective_config(sub);
  return doc;
}

std::string option_value(const json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return g17(v.get<double>());
  throw DomainError("config: parameter \"" + key + "\" must be a string, number, boolean or array");
}

// Expands a config file into command-line tokens.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("config: top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "schema_version" && key != "subcommand" && key != "parameters" && key != "format" &&
        key != "output" && key != "seed")
      throw DomainError("config: unknown key \"" + key + "\"");
  }
  if (!doc.contains("schema_version") || doc["schema_version"] != kConfigSchemaVersion)
    throw DomainError("config: schema_version must be " + std::to_string(kConfigSchemaVersion));
  if (!doc.contains("subcommand") || !doc["subcommand"].is_string())
    throw DomainError("config: subcommand is required");
  std::vector<std::string> tokens{doc["subcommand"].get<std::string>()};
  json params = doc.value("parameters", json::object());
  if (!params.is_object()) throw DomainError("config: parameters must be an object");
  for (const char* key : {"format", "output", "seed"}) {
    if (doc.contains(key)) params[key] = doc[key];
  }
  for (const auto& [key, value] : params.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back("--" + key);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) joined += (joined.empty() ? "" : ",") + option_value(item, key);
      tokens.push_back("--" + key);
      tokens.push_back(joined);
    } else {
      tokens.push_back("--" + key);
      tokens.push_back(option_value(value, key));
    }
  }
  return tokens;
}

class Output {
 public:
  explicit Output(std::ostream& fallback) : fallback_(fallback) {}
  void write(const std::string& path, const std::string& text) {
    if (path.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("output: cannot open " + path);
    file << text;
  }

 private:
  std::ostream& fallback_;
};

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

struct FunctionSource {
  bool paper = false;
  std::string coeffs;

  void add_to(CLI::App* sub) {
    auto* p = sub->add_flag("--paper", paper, "use the reference candidate");
    auto* c = sub->add_option("--coeffs", coeffs, "coefficient JSON file")->check(CLI::ExistingFile);
    p->excludes(c);
  }
  EigenPlusFunction load(bool default_to_reference) const {
    if (!coeffs.empty()) return load_coefficient_file(coeffs);
    if (paper || default_to_reference) return paper_candidate();
    throw DomainError("one of --paper or --coeffs is required");
  }
};

ordered_json minima_json(const std::vector<LocalMinimum>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& m : v) arr.push_back({{"location", m.location}, {"value", m.value}});
  return arr;
}

ordered_json certificate_json(const RootCertificate& cert) {
  ordered_json doc;
  doc["largest_root"] = cert.largest_root;
  doc["scan_bound"] = cert.scan_bound;
  doc["tail_reason"] = "leading-term-domination";
  doc["roots"] = cert.roots;
  doc["double_roots"] = minima_json(cert.double_roots);
  doc["near_double_roots"] = minima_json(cert.near_double_roots);
  if (!cert.near_double_roots.empty()) doc["near_double_root"] = cert.near_double_roots.front().location;
  return doc;
}

// Sign changes on the grid refined by bisection, plus refined interior grid minima.
struct Features {
  std::vector<double> roots;
  std::vector<LocalMinimum> minima;
};

Features grid_features(const std::function<double(double)>& g, const std::vector<double>& xs,
                       const std::vector<double>& ys) {
  Features out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (ys[i] == 0.0) {
      out.roots.push_back(xs[i]);
    } else if (ys[i] * ys[i + 1] < 0.0) {
      double a = xs[i];
      double b = xs[i + 1];
      double ga = ys[i];
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::fabs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double gm = g(m);
        if ((gm < 0.0) == (ga < 0.0)) {
          a = m;
          ga = gm;
        } else {
          b = m;
        }
      }
      out.roots.push_back(0.5 * (a + b));
    }
  }
  constexpr double kInvPhi = 0.6180339887498949;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (!(ys[i] < ys[i - 1] && ys[i] <= ys[i + 1])) continue;
    double a = xs[i - 1];
    double b = xs[i + 1];
    for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
      const double c = b - kInvPhi * (b - a);
      const double d = a + kInvPhi * (b - a);
      if (g(c) < g(d)) {
        b = d;
      } else {
        a = c;
      }
    }
    const double x = 0.5 * (a + b);
    out.minima.push_back({x, g(x)});
  }
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Output sink(out);
  try {
    std::vector<std::string> args = raw_args;
    const auto config_it = std::find(args.begin(), args.end(), "--config");
    if (config_it != args.end()) {
      if (config_it + 1 == args.end()) throw DomainError("--config requires a file path");
      if (args.size() != 2) throw DomainError("--config cannot be combined with other arguments");
      args = config_tokens(*(config_it + 1));
    }

    CLI::App app{"Fourier sign-uncertainty toolkit", "frl"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--config", "JSON run configuration");

    std::string output;
    const auto add_output = [&output](CLI::App* sub) {
      sub->add_option("--output", output, "write results to this file instead of standard output");
    };

    // lambda-table
    int dmin = 2;
    int dmax = 9;
    std::string table_format = "csv";
    auto* lambda_cmd = app.add_subcommand("lambda-table", "lambda_d and dimension bounds");
    lambda_cmd->add_option("--dmin", dmin)->check(CLI::Range(2, 120));
    lambda_cmd->add_option("--dmax", dmax)->check(CLI::Range(2, 120));
    lambda_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    add_output(lambda_cmd);

    // candidate
    FunctionSource candidate_src;
    bool report = false;
    double grid_step = 1e-3;
    double quad_tol = 1e-10;
    auto* candidate_cmd = app.add_subcommand("candidate", "certified roots of an eigenfunction");
    candidate_src.add_to(candidate_cmd);
    candidate_cmd->add_flag("--report", report, "add norms and sign-split integrals");
    candidate_cmd->add_option("--grid-step", grid_step)->check(CLI::PositiveNumber);
    candidate_cmd->add_option("--tol", quad_tol)->check(CLI::PositiveNumber);
    add_output(candidate_cmd);

    // optimize
    FunctionSource optimize_src;
    SearchConfig search;
    search.max_index = 4;
    long long seed = 1;
    std::string log_path;
    auto* optimize_cmd = app.add_subcommand("optimize", "greedy coordinate search");
    optimize_src.add_to(optimize_cmd);
    optimize_cmd->add_option("--N", search.max_index)->check(CLI::Range(1, 40));
    optimize_cmd->add_option("--initial-step", search.initial_step)->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--shrink", search.shrink)->check(CLI::Range(0.0, 1.0));
    optimize_cmd->add_option("--min-step", search.min_step)->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--max-passes", search.max_passes)->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--pivot", search.pivot)->check(CLI::NonNegativeNumber);
    optimize_cmd->add_option("--acceptance-tol", search.acceptance_tol)->check(CLI::NonNegativeNumber);
    optimize_cmd->add_option("--seed", seed)->check(CLI::NonNegativeNumber);
    optimize_cmd->add_option("--log", log_path, "JSON-lines log of accepted moves");
    add_output(optimize_cmd);

    // lower-bound
    double A = 0.45;
    double tau = 13.0 / 500.0;
    double a_min = 0.0;
    double a_max = 0.0;
    int a_count = 0;
    auto* lower_cmd = app.add_subcommand("lower-bound", "inequality check for the one-dimensional bound");
    lower_cmd->add_option("--A", A)->check(CLI::Range(1e-6, 0.5));
    lower_cmd->add_option("--tau", tau)->check(CLI::Range(0.0, 0.25));
    lower_cmd->add_option("--A-min", a_min, "margin table start")->check(CLI::Range(0.0, 0.5));
    lower_cmd->add_option("--A-max", a_max, "margin table end")->check(CLI::Range(0.0, 0.5));
    lower_cmd->add_option("--A-count", a_count, "margin table size (0: none)")->check(CLI::Range(0, 100000));
    add_output(lower_cmd);

    // sign-search
    std::string family = "hermite";
    std::vector<double> points;
    std::string pattern;
    int nmax = 5000;
    int nmin = 0;
    int offset = 0;
    double nu = 0.0;
    std::string sign_format = "json";
    auto* sign_cmd = app.add_subcommand("sign-search", "sign patterns of H_4n, phi_n and Laguerre families");
    sign_cmd->add_option("--family", family)->check(CLI::IsMember({"hermite", "phi", "laguerre"}));
    sign_cmd->add_option("--points", points)->delimiter(',')->required();
    sign_cmd->add_option("--pattern", pattern, "e.g. +,+,- (hermite only)");
    auto* nmax_opt = sign_cmd->add_option("--nmax", nmax, "default 5000, or 2000 for laguerre")->check(CLI::Range(0, 10000000));
    sign_cmd->add_option("--nmin", nmin)->check(CLI::Range(0, 10000000));
    sign_cmd->add_option("--offset", offset)->check(CLI::IsMember({0, 2}));
    sign_cmd->add_option("--nu", nu);
    sign_cmd->add_option("--format", sign_format)->check(CLI::IsMember({"csv", "json"}));
    add_output(sign_cmd);

    // ft-check
    FunctionSource ft_src;
    std::vector<double> ys{0.0, 0.5, 1.0, 1.5, 2.0};
    double ft_tol = 1e-9;
    auto* ft_cmd = app.add_subcommand("ft-check", "Fourier self-duality by quadrature");
    ft_src.add_to(ft_cmd);
    ft_cmd->add_option("--y", ys)->delimiter(',');
    ft_cmd->add_option("--tol", ft_tol)->check(CLI::PositiveNumber);
    add_output(ft_cmd);

    // plot-data
    std::string function = "candidate";
    FunctionSource plot_src;
    double plot_A = 0.45;
    int psi_n = 0;
    double from = 0.0;
    double to = 2.5;
    double step = 0.005;
    auto* plot_cmd = app.add_subcommand("plot-data", "dense samples as CSV");
    plot_cmd->add_option("--function", function)->check(CLI::IsMember({"candidate", "upsilon", "psi"}));
    plot_src.add_to(plot_cmd);
    plot_cmd->add_option("--A", plot_A)->check(CLI::Range(1e-6, 0.5));
    plot_cmd->add_option("--n", psi_n)->check(CLI::Range(0, 100000));
    plot_cmd->add_option("--from", from);
    plot_cmd->add_option("--to", to);
    plot_cmd->add_option("--step", step)->check(CLI::PositiveNumber);
    add_output(plot_cmd);

    // verify-all
    std::vector<int> criteria;
    auto* verify_cmd = app.add_subcommand("verify-all", "run the acceptance suite");
    verify_cmd->add_option("--criteria", criteria, "subset of criterion ids")->delimiter(',');
    add_output(verify_cmd);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::CallForVersion&) {
      out << kVersion << "\n";
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "frl: " << e.what() << "\n";
      return 2;
    }

    if (lambda_cmd->parsed()) {
      if (dmin > dmax) throw DomainError("lambda-table: dmin <= dmax required");
      const auto rows = bound_table(dmin, dmax);
      if (table_format == "csv") {
        std::string text = "d,lambda_d,bound_new,bound_bck,bound_upper,u_d\n";
        for (const auto& r : rows) {
          text += std::to_string(r.d) + "," + g17(r.lambda_d) + "," + g17(r.bound_new) + "," + g17(r.bound_bck) +
                  "," + g17(r.bound_upper) + "," + g17(r.u_d) + "\n";
        }
        sink.write(output, text);
      } else {
        auto doc = envelope(*lambda_cmd);
        doc["rows"] = ordered_json::array();
        for (const auto& r : rows) {
          doc["rows"].push_back({{"d", r.d},
                                 {"lambda_d", r.lambda_d},
                                 {"bound_new", r.bound_new},
                                 {"bound_bck", r.bound_bck},
                                 {"bound_upper", r.bound_upper},
                                 {"u_d", r.u_d}});
        }
        sink.write(output, dump(doc));
      }
      return 0;
    }

    if (candidate_cmd->parsed()) {
      const auto f = candidate_src.load(false);
      RootScanOptions options;
      options.grid_step = grid_step;
      const auto cert = root_certificate(f, options);
      auto doc = envelope(*candidate_cmd);
      doc["coeffs"] = f.coeffs();
      doc["psi_coeffs"] = f.psi_coeffs();
      doc["normalized"] = f.normalized();
      doc["value_at_zero"] = f.value_at_zero();
      const auto roots = certificate_json(cert);
      for (const auto& [key, value] : roots.items()) doc[key] = value;
      if (report) {
        const auto split = sign_split_integrals(f, quad_tol);
        doc["integral"] = split.positive + split.negative;
        doc["positive_part"] = split.positive;
        doc["negative_part"] = split.negative;
        doc["l1_norm"] = split.positive - split.negative;
        doc["envelope"] = f.envelope();
      }
      sink.write(output, dump(doc));
      return 0;
    }

    if (optimize_cmd->parsed()) {
      search.seed = static_cast<std::uint64_t>(seed);
      search.validate();
      auto start = optimize_src.load(true);
      auto coeffs = start.coeffs();
      if (static_cast<int>(coeffs.size()) <= search.max_index) {
        coeffs.resize(static_cast<std::size_t>(search.max_index) + 1, 0.0);
        start = EigenPlusFunction(coeffs, start.normalized());
      }
      std::unique_ptr<std::ofstream> log;
      if (!log_path.empty()) {
        log = std::make_unique<std::ofstream>(log_path, std::ios::binary);
        if (!*log) throw DomainError("log: cannot open " + log_path);
      }
      const auto result = greedy_search(start, search, [&log](const SearchLogEntry& e) {
        if (!log) return;
        ordered_json line{{"pass", e.pass}, {"coordinate", e.coordinate}, {"step", e.step}, {"objective", e.objective}};
        *log << line.dump() << "\n";
      });
      auto doc = envelope(*optimize_cmd);
      doc["start_objective"] = result.start_objective;
      doc["objective"] = result.objective;
      doc["improvement"] = result.start_objective - result.objective;
      doc["gap_to_lower_bound"] = result.objective - 0.45;
      doc["passes"] = result.passes;
      doc["evaluations"] = result.evaluations;
      doc["coeffs"] = result.best.coeffs();
      doc["psi_coeffs"] = result.best.psi_coeffs();
      sink.write(output, dump(doc));
      return 0;
    }

    if (lower_cmd->parsed()) {
      if (a_count > 0 && !(a_min > 0.0 && a_min <= a_max)) throw DomainError("lower-bound: 0 < A-min <= A-max required");
      const auto check = check_inequality(A, tau);
      auto doc = envelope(*lower_cmd);
      doc["result"] = check.holds() ? "holds" : "fails";
      doc["margin"] = check.margin;
      doc["lhs"] = check.lhs;
      doc["h1"] = check.h1;
      doc["h2"] = check.h2;
      doc["sup"] = check.sup;
      doc["tau_ub"] = tau_ub(A);
      const auto bounds = check_upsilon_bounds(A, 10000);
      doc["upsilon_bounds"] = {{"max_near_zero", bounds.max_near_zero},
                               {"min_off_window", bounds.min_off_window},
                               {"holds", bounds.holds()}};
      std::vector<double> taus;
      for (int i = 0; i <= 10; ++i) taus.push_back(0.005 * i);
      doc["derivatives"] = ordered_json::array();
      for (const auto& s : h_derivatives(A, taus)) {
        doc["derivatives"].push_back({{"tau", s.tau}, {"dh1", s.dh1}, {"dh2", s.dh2}});
      }
      if (a_count > 0) {
        doc["margin_table"] = ordered_json::array();
        for (int i = 0; i < a_count; ++i) {
          const double a = a_count == 1 ? a_min : a_min + (a_max - a_min) * i / (a_count - 1);
          const auto c = check_inequality(a, tau);
          doc["margin_table"].push_back({{"A", a}, {"margin", c.margin}, {"holds", c.holds()}});
        }
      }
      sink.write(output, dump(doc));
      return 0;
    }

    if (sign_cmd->parsed()) {
      if (family == "laguerre" && nmax_opt->count() == 0) nmax = 2000;
      if (nmin > nmax) throw DomainError("sign-search: nmin <= nmax required");
      SearchOutcome outcome;
      std::optional<Sign> expected;
      if (family == "hermite") {
        if (pattern.empty()) throw DomainError("sign-search: --pattern is required for the hermite family");
        const auto parsed = SignPattern::parse(pattern);
        if (parsed.size() != points.size()) throw DomainError("sign-search: pattern length must equal number of points");
        outcome = hermite_sign_search(points, parsed, nmax, nmin, offset);
      } else if (family == "phi") {
        outcome = phi_sign_search(points, nmax, nmin);
      } else {
        const auto lag = laguerre_sign_search(nu, points, nmax, nmin);
        outcome = lag.search;
        expected = lag.expected;
      }
      if (sign_format == "csv") {
        std::string text = "n\n";
        for (int n : outcome.matches) text += std::to_string(n) + "\n";
        sink.write(output, text);
        return 0;
      }
      auto doc = envelope(*sign_cmd);
      doc["config"]["parameters"]["nmax"] = nmax;
      if (expected) doc["expected_sign"] = *expected == Sign::Plus ? "+" : "-";
      doc["match_count"] = outcome.matches.size();
      doc["matches"] = outcome.matches;
      doc["predictor_matches"] = outcome.predictor_matches;
      doc["uncertain"] = outcome.uncertain;
      ordered_json counts = ordered_json::object();
      for (const auto& [key, count] : outcome.pattern_counts) counts[key] = count;
      doc["pattern_counts"] = counts;
      sink.write(output, dump(doc));
      return 0;
    }

    if (ft_cmd->parsed()) {
      const auto f = ft_src.load(false);
      const Integrand g = f.integrand();
      auto doc = envelope(*ft_cmd);
      doc["rows"] = ordered_json::array();
      double worst = 0.0;
      for (double y : ys) {
        const double ft = fourier_even(g, y, ft_tol);
        const double fy = f.eval(y);
        worst = std::max(worst, std::fabs(ft - fy));
        doc["rows"].push_back({{"y", y}, {"f", fy}, {"fourier", ft}, {"difference", ft - fy}});
      }
      doc["max_difference"] = worst;
      sink.write(output, dump(doc));
      return 0;
    }

    if (plot_cmd->parsed()) {
      if (!(to >= from)) throw DomainError("plot-data: from <= to required");
      const long count = std::lround(std::floor((to - from) / step + 1e-9)) + 1;
      if (count > 10000000) throw DomainError("plot-data: more than 1e7 samples requested");
      std::function<double(double)> g;
      std::optional<EigenPlusFunction> f;
      if (function == "candidate") {
        f = plot_src.load(true);
        g = [&f](double x) { return f->eval(x); };
      } else if (function == "upsilon") {
        g = [plot_A](double x) { return upsilon(plot_A, x); };
      } else {
        g = [psi_n](double x) { return psi(psi_n, x); };
      }
      std::vector<double> xs(static_cast<std::size_t>(count));
      std::vector<double> vals(xs.size());
      std::string text = "x,value\n";
      for (long i = 0; i < count; ++i) {
        xs[i] = from + static_cast<double>(i) * step;
        vals[i] = g(xs[i]);
        text += g17(xs[i]) + "," + g17(vals[i]) + "\n";
      }
      text += "\nkind,x,value\n";
      if (f) {
        const auto cert = root_certificate(*f);
        const auto in_range = [&](double x) { return x >= from && x <= to; };
        std::vector<std::pair<double, std::string>> rows;
        for (double r : cert.roots) {
          for (double x : {-r, r}) {
            if (in_range(x)) rows.emplace_back(x, "root");
          }
        }
        for (const auto& m : cert.near_double_roots) {
          for (double x : {-m.location, m.location}) {
            if (in_range(x)) rows.emplace_back(x, "near_double_root");
          }
        }
        for (const auto& m : cert.double_roots) {
          for (double x : {-m.location, m.location}) {
            if (in_range(x)) rows.emplace_back(x, "double_root");
          }
        }
        std::sort(rows.begin(), rows.end());
        for (const auto& [x, kind] : rows) text += kind + "," + g17(x) + "," + g17(g(x)) + "\n";
      } else {
        const auto features = grid_features(g, xs, vals);
        for (double r : features.roots) text += "root," + g17(r) + "," + g17(g(r)) + "\n";
        for (const auto& m : features.minima) text += "local_min," + g17(m.location) + "," + g17(m.value) + "\n";
      }
      sink.write(output, text);
      return 0;
    }

    if (verify_cmd->parsed()) {
      bool all = true;
      ordered_json doc = envelope(*verify_cmd);
      doc["criteria"] = ordered_json::array();
      run_acceptance(criteria, [&](const CriterionResult& r) {
        all = all && r.pass;
        out << format_result(r) << std::endl;
        doc["criteria"].push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
      });
      doc["all_pass"] = all;
      if (!output.empty()) sink.write(output, dump(doc));
      return all ? 0 : 1;
    }
    throw InternalError("no subcommand dispatched");
  } catch (const DomainError& e) {
    err << "frl: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "frl: " << e.what() << "\n";
    return 1;
  }
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace frl
