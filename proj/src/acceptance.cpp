#include "frl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

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

constexpr double kPi = std::numbers::pi;

// Collects named sub-checks for one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool pass() const { return pass_; }
  std::string detail() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < notes_.size(); ++i) os << (i ? "; " : "") << notes_[i];
    if (!failures_.empty()) {
      os << (notes_.empty() ? "" : "; ") << "FAILED: ";
      for (std::size_t i = 0; i < failures_.size(); ++i) os << (i ? " | " : "") << failures_[i];
    }
    return os.str();
  }

 private:
  bool pass_ = true;
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
};

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

std::string fmt(const char* pattern, double a, double b, double c) {
  char buf[192];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

CriterionResult lambda_table() {
  Checks c;
  constexpr double kTable[] = {0.132, 0.086, 0.058, 0.041, 0.029, 0.021, 0.015, 0.011};
  const auto start = std::chrono::steady_clock::now();
  const auto rows = bound_table(2, 9);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double err = std::fabs(rows[i].lambda_d - kTable[i]);
    worst = std::max(worst, err);
    c.expect(err <= 5e-3, fmt("d=%g lambda=%.6f", rows[i].d, rows[i].lambda_d));
  }
  c.note(fmt("max |lambda_d - table| = %.2e over d=2..9", worst));
  c.expect(seconds < 5.0, fmt("runtime %.2f s >= 5 s", seconds));
  return {1, "", c.pass(), c.detail(), 0};
}

CriterionResult lambda_structure() {
  Checks c;
  double max_lambda = 0.0;
  double max_route_gap = 0.0;
  for (int d = 2; d <= 60; ++d) {
    const double l = lambda_d(d);
    max_lambda = std::max(max_lambda, l);
    c.expect(l < 0.5, fmt("lambda_%g = %.4f >= 1/2", d, l));
    const double gap = std::fabs(l - lambda_d_direct(d));
    max_route_gap = std::max(max_route_gap, gap);
    c.expect(gap <= 1e-8, fmt("d=%g routes differ by %.2e", d, gap));
    if (d >= 10) {
      c.expect(l <= u_d(d), fmt("d=%g lambda %.3e > U_d", d, l));
      if (d > 10) c.expect(u_d(d) < u_d(d - 1), fmt("U_d not decreasing at d=%g", d));
    }
  }
  c.expect(u_d(10) <= 0.494, fmt("U_10 = %.5f > 0.494", u_d(10)));
  c.note(fmt("max lambda_d (d=2..60) = %.4f, U_10 = %.5f, max route gap = %.1e", max_lambda, u_d(10), max_route_gap));
  return {2, "", c.pass(), c.detail(), 0};
}

CriterionResult candidate() {
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  const auto f = paper_candidate();
  const auto cert = root_certificate(f);
  c.expect(std::fabs(cert.largest_root - 0.59354) <= 1e-3, fmt("largest root %.6f", cert.largest_root));
  const LocalMinimum* near = nullptr;
  for (const auto& m : cert.near_double_roots) {
    if (std::fabs(m.location - 0.8990) <= 5e-3) near = &m;
  }
  c.expect(near != nullptr, "no near-double root within 5e-3 of 0.8990");
  double worst = 0.0;
  const Integrand g = f.integrand();
  for (double y : {0.0, 0.35, 0.8990, 1.3, 2.0}) {
    worst = std::max(worst, std::fabs(fourier_even(g, y, 1e-9) - f.eval(y)));
  }
  c.expect(worst <= 1e-6, fmt("self-duality error %.2e", worst));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(seconds < 10.0, fmt("runtime %.2f s >= 10 s", seconds));
  c.note(fmt("largest root %.10f, scan bound %.4f", cert.largest_root, cert.scan_bound));
  if (near) c.note(fmt("local minimum at %.8f with value %.6e", near->location, near->value));
  c.note(fmt("max |F f - f| at 5 points %.1e", worst));
  return {3, "", c.pass(), c.detail(), 0};
}

CriterionResult lower_bound() {
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  const double t = tau_ub(0.45);
  c.expect(t < 13.0 / 500.0, fmt("tau_ub(0.45) = %.10f", t));
  c.note(fmt("tau_ub(0.45) = %.10f", t));
  std::vector<double> taus;
  for (int i = 0; i <= 10; ++i) taus.push_back(0.005 * i);
  double max_dh1 = 0.0;
  double max_dh2 = 0.0;
  for (double A : {0.30, 0.40, 0.449}) {
    const auto bounds = check_upsilon_bounds(A, 10000);
    c.expect(bounds.max_near_zero <= 0.39, fmt("A=%.3f: max on [0,1/10] = %.5f", A, bounds.max_near_zero));
    c.expect(bounds.min_off_window >= -0.09, fmt("A=%.3f: min off [7/5,9/5] = %.5f", A, bounds.min_off_window));
    for (const auto& s : h_derivatives(A, taus)) {
      max_dh1 = std::max(max_dh1, s.dh1);
      max_dh2 = std::max(max_dh2, s.dh2);
      c.expect(s.dh1 <= 0.78 + 1e-3, fmt("A=%.3f tau=%.3f: dh1/dtau = %.5f > 0.781", A, s.tau, s.dh1));
      c.expect(s.dh2 <= 0.18 + 1e-3, fmt("A=%.3f tau=%.3f: dh2/dtau = %.5f > 0.181", A, s.tau, s.dh2));
    }
  }
  c.note(fmt("max dh1/dtau %.5f, max dh2/dtau %.5f, sum %.5f", max_dh1, max_dh2, max_dh1 + max_dh2));
  int held = 0;
  double worst_margin = -1.0;
  constexpr int kGrid = 200;
  for (int i = 0; i < kGrid; ++i) {
    const double A = 0.26 + (0.4499 - 0.26) * i / (kGrid - 1);
    const auto check = check_inequality(A, 13.0 / 500.0);
    worst_margin = std::max(worst_margin, check.margin);
    if (check.holds()) ++held;
  }
  c.expect(held == 0, fmt("inequality holds at %g of 200 A values", held));
  c.note(fmt("largest margin over the A-grid at tau=13/500: %.6f", worst_margin));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(seconds < 120.0, fmt("runtime %.1f s >= 120 s", seconds));
  return {4, "", c.pass(), c.detail(), 0};
}

CriterionResult special_functions() {
  Checks c;
  double worst_orth = 0.0;
  for (int m = 0; m <= 12; ++m) {
    for (int n = m; n <= 12; ++n) {
      const Integrand g{[m, n](double x) { return psi(m, x) * psi(n, x); }, DecayClass::GaussianTail, 1e4};
      const double v = integrate_line(g, 1e-10);
      worst_orth = std::max(worst_orth, std::fabs(v - (m == n ? 1.0 : 0.0)));
    }
  }
  c.expect(worst_orth <= 1e-7, fmt("orthonormality error %.2e", worst_orth));
  double worst_comp = 0.0;
  for (const auto& [nu, rho] : {std::pair{1.0, 1.0}, std::pair{2.0, 5.0}, std::pair{3.5, 20.0}}) {
    const Integrand g{[nu](double r) { return bessel_j(BesselOrder(nu - 1.0), r) * std::pow(r, nu); },
                      DecayClass::Compact, 1.0};
    QuadratureOptions options;
    options.tol = 1e-9;
    options.max_panel_width = 0.5;
    const double lhs = integrate_adaptive(g, 0.0, rho, options).value;
    const double rhs = bessel_j(BesselOrder(nu), rho) * std::pow(rho, nu);
    worst_comp = std::max(worst_comp, std::fabs(lhs - rhs));
  }
  c.expect(worst_comp <= 1e-8, fmt("Bessel integral identity error %.2e", worst_comp));
  for (double nu : {1.0, 2.0, 5.0}) {
    const auto theta = bessel_stationary_points(BesselOrder(nu), 10);
    for (std::size_t k = 1; k < theta.size(); ++k) {
      const double prev = std::fabs(bessel_j(BesselOrder(nu), theta[k - 1]));
      const double cur = std::fabs(bessel_j(BesselOrder(nu), theta[k]));
      c.expect(cur < prev, fmt("nu=%g: |J(theta_k)| not decreasing at k=%g", nu, static_cast<double>(k)));
    }
  }
  for (int i = 0; i <= 120; ++i) {
    const double nu = 0.5 * i;
    const double j = bessel_first_zero(BesselOrder(nu));
    c.expect(j > nu, fmt("j_nu = %.6f <= nu = %g", j, nu));
  }
  for (int i = 1; i <= 100; ++i) {
    const double x = 0.5 * i;
    const double base = 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(x) - x;
    const double lg = std::log(gamma(x));
    const double lo = base + 1.0 / (12.0 * x + 1.0);
    const double hi = base + 1.0 / (12.0 * x);
    c.expect(lg >= lo - 1e-13 * std::fabs(lo) && lg <= hi + 1e-13 * std::fabs(hi),
             fmt("gamma(%g) outside the Stirling envelope", x));
  }
  c.note(fmt("orthonormality %.1e, Bessel identity %.1e", worst_orth, worst_comp));
  c.note("zeros j_nu > nu for nu = 0..60 step 1/2; Stirling envelope for x = 0.5..50");
  return {5, "", c.pass(), c.detail(), 0};
}

CriterionResult laguerre_multiplier() {
  Checks c;
  double worst = 0.0;
  for (int d : {2, 3}) {
    const double nu = 0.5 * d - 1.0;
    for (int n = 0; n <= 4; ++n) {
      const auto profile = [n, nu](double r) {
        return laguerre(n, nu, 2.0 * kPi * r * r).to_double() * std::exp(-kPi * r * r);
      };
      double envelope = 1.0;
      for (int i = 0; i <= 1000; ++i) {
        const double r = 0.01 * i;
        envelope = std::max(envelope, 2.0 * std::fabs(profile(r)) * std::exp(0.5 * kPi * r * r));
      }
      const Integrand g{profile, DecayClass::GaussianTail, envelope};
      for (double s : {0.2, 0.6, 1.0}) {
        const double expected = (n % 2 == 0 ? 1.0 : -1.0) * profile(s);
        const double err = std::fabs(radial_fourier(g, s, d, 1e-9) - expected);
        worst = std::max(worst, err);
        c.expect(err <= 1e-6, fmt("d=%g n=%g s=%g", d, n, s));
      }
    }
  }
  double worst_gen = 0.0;
  for (double nu : {0.0, 0.5}) {
    for (double x : {0.5, 2.0, 5.0}) {
      const auto seq = laguerre_sequence(60, nu, x);
      double sum = 0.0;
      double power = 1.0;
      for (const auto& l : seq) {
        sum += power * l.to_double();
        power *= 0.5;
      }
      const double exact = std::pow(0.5, -nu - 1.0) * std::exp(-0.5 * x / 0.5);
      worst_gen = std::max(worst_gen, std::fabs(sum - exact));
    }
  }
  c.expect(worst_gen <= 1e-8, fmt("generating function error %.2e", worst_gen));
  c.note(fmt("max multiplier error %.1e, generating function error at N=60 %.1e", worst, worst_gen));
  return {6, "", c.pass(), c.detail(), 0};
}

CriterionResult sign_patterns() {
  Checks c;
  const auto start = std::chrono::steady_clock::now();
  const auto plus = hermite_sign_search({1, 2, 3}, SignPattern::parse("+++"), 2000);
  c.expect(!plus.matches.empty(), "no all-positive H_4n match at (1,2,3)");
  const auto obstruction = hermite_sign_search({1, 2, 3, 4}, SignPattern::parse("++-+"), 5000, 50);
  c.expect(obstruction.matches.empty(), fmt("(+,+,-,+) occurs %g times", obstruction.matches.size()));
  c.expect(obstruction.uncertain.empty(), "sign-uncertain values in the obstruction scan");
  const auto phi_hits = phi_sign_search({0.59354, 0.8990}, 500);
  c.expect(std::find(phi_hits.matches.begin(), phi_hits.matches.end(), 6) != phi_hits.matches.end(),
           "phi search misses n = 6");
  const auto lag0 = laguerre_sign_search(0.0, {1, 3}, 2000);
  const auto lag2 = laguerre_sign_search(2.0, {0.5, 2}, 2000);
  c.expect(lag0.expected == Sign::Plus && !lag0.search.matches.empty(), "Laguerre nu=0 has no + matches");
  c.expect(lag2.expected == Sign::Minus && !lag2.search.matches.empty(), "Laguerre nu=2 has no - matches");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(seconds < 180.0, fmt("runtime %.1f s >= 180 s", seconds));
  c.note(fmt("all-+ matches %g, phi matches %g", plus.matches.size(), phi_hits.matches.size()));
  c.note(fmt("Laguerre matches nu=0: %g, nu=2: %g", lag0.search.matches.size(), lag2.search.matches.size()));
  c.note("(+,+,-,+) matches for n in [50,5000]: 0");
  return {7, "", c.pass(), c.detail(), 0};
}

// Bounded with no growth: every value <= cap and the last <= 2 * max of the earlier ones.
bool flat(const std::vector<double>& v, double cap) {
  const double earlier = *std::max_element(v.begin(), v.end() - 1);
  return *std::max_element(v.begin(), v.end()) <= cap && v.back() <= 2.0 * earlier;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : ",") + fmt("%.4f", x);
  return out;
}

CriterionResult asymptotic_rates() {
  Checks c;
  constexpr int kDegrees[] = {100, 400, 1600, 6400};
  for (double x : {0.5, 1.0, 2.0}) {
    std::vector<double> scaled;
    for (int n : kDegrees) {
      const double err = std::fabs(hermite_normalized(n, x) - hermite_asymptotic(n, x, AsymptoticOrder::Leading));
      scaled.push_back(err * std::sqrt(static_cast<double>(n)));
    }
    c.expect(flat(scaled, 0.5), fmt("Hermite x=%g", x) + " [" + join(scaled) + "]");
    c.note(fmt("Hermite x=%g: ", x) + join(scaled));
  }
  for (double nu : {0.0, 1.0}) {
    for (double x : {1.0, 3.0}) {
      std::vector<double> scaled;
      for (int n : kDegrees) {
        const double err = std::fabs(laguerre_fejer_scaled(n, nu, x) - laguerre_fejer_leading(n, nu, x));
        scaled.push_back(err * std::pow(n, 0.75 - 0.5 * nu));
      }
      c.expect(flat(scaled, 1.5), fmt("Fejer nu=%g x=%g", nu, x) + " [" + join(scaled) + "]");
      c.note(fmt("Fejer nu=%g x=%g: ", nu, x) + join(scaled));
    }
  }
  return {8, "", c.pass(), c.detail(), 0};
}

CriterionResult optimizer_sanity() {
  Checks c;
  const auto start = paper_candidate();
  for (int N : {3, 4}) {
    auto coeffs = start.coeffs();
    coeffs.resize(static_cast<std::size_t>(N) + 1, 0.0);
    SearchConfig config;
    config.max_index = N;
    const auto result = greedy_search(EigenPlusFunction(coeffs, true), config);
    c.expect(result.objective <= result.start_objective, fmt("N=%g worsened the objective", N));
    double last = result.start_objective;
    for (const auto& entry : result.log) {
      c.expect(entry.objective <= last, fmt("N=%g log not monotone", N));
      last = entry.objective;
    }
    const auto check = objective(result.best);
    c.expect(check.has_value() && std::fabs(*check - result.objective) < 1e-12, fmt("N=%g result infeasible", N));
    const double improvement = result.start_objective - result.objective;
    if (N == 4) c.expect(improvement > 0.0 && improvement < 1e-3, fmt("N=4 improvement %.3e", improvement));
    c.note(fmt("N=%g: %.8f -> %.8f", N, result.start_objective, result.objective) +
           fmt(" (improvement %.2e)", improvement));
  }
  return {9, "", c.pass(), c.detail(), 0};
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "lambda_d table d=2..9", lambda_table},
      {2, "lambda_d structure and U_d envelope", lambda_structure},
      {3, "candidate reproduction", candidate},
      {4, "lower-bound machine", lower_bound},
      {5, "special-function suite", special_functions},
      {6, "Laguerre-Fourier multiplier", laguerre_multiplier},
      {7, "sign patterns", sign_patterns},
      {8, "asymptotic rates", asymptotic_rates},
      {9, "optimizer sanity", optimizer_sanity},
  };
  return criteria;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (const auto& criterion : acceptance_criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), criterion.id) == ids.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = criterion.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = criterion.id;
    r.title = criterion.title;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s  criterion %d  %s  (%.2f s)", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds);
  return std::string(head) + "\n      " + r.detail;
}

}  // namespace frl
