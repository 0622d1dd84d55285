#include "frl/eigenfunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "frl/detail/scaled_pair.hpp"
#include "frl/errors.hpp"
#include "frl/specfun.hpp"

namespace frl {

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

ScaledValue psi_factor(int n) {
  // 2^{1/4} / sqrt(2^{4n} (4n)!)
  return ScaledValue::exp2(0.25 - 2.0 * n) / factorial_scaled(4 * n).sqrt();
}

}  // namespace

ScaledValue hermite_4n_at_zero(int n) {
  if (n < 0) throw DomainError("hermite_4n_at_zero: requires n >= 0");
  ScaledValue h(1.0);
  for (int k = 0; k < n; ++k) {
    const double num = (4.0 * k + 1.0) * (4.0 * k + 2.0) * (4.0 * k + 3.0) * (4.0 * k + 4.0);
    h *= ScaledValue(num / ((2.0 * k + 1.0) * (2.0 * k + 2.0)));
  }
  return h;
}

EigenPlusFunction::EigenPlusFunction(std::vector<double> coeffs, bool normalized)
    : coeffs_(std::move(coeffs)), normalized_(normalized) {
  if (coeffs_.empty()) throw DomainError("EigenPlusFunction: needs at least one coefficient");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("EigenPlusFunction: coefficients must be finite");
  }
  if (normalized_) {
    ScaledValue sum;
    ScaledValue scale;
    for (int n = 0; n <= max_index(); ++n) {
      const ScaledValue term = ScaledValue(coeffs_[static_cast<std::size_t>(n)]) * hermite_4n_at_zero(n);
      sum += term;
      scale += term.abs();
    }
    if (sum.abs() > scale * ScaledValue(1e-12)) {
      throw DomainError("EigenPlusFunction: normalized flag set but f(0) = " + sum.to_string());
    }
  }
}

EigenPlusFunction EigenPlusFunction::from_psi(const std::vector<double>& psi_coeffs, bool normalized) {
  std::vector<double> alpha(psi_coeffs.size());
  for (std::size_t n = 0; n < psi_coeffs.size(); ++n) {
    alpha[n] = (ScaledValue(psi_coeffs[n]) * psi_factor(static_cast<int>(n))).to_double();
  }
  return EigenPlusFunction(std::move(alpha), normalized);
}

std::vector<double> EigenPlusFunction::psi_coeffs() const {
  std::vector<double> out(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    out[n] = (ScaledValue(coeffs_[n]) / psi_factor(static_cast<int>(n))).to_double();
  }
  return out;
}

ScaledValue EigenPlusFunction::eval_scaled(double x) const {
  if (!std::isfinite(x)) throw DomainError("eval: x must be finite");
  const double y = kSqrt2Pi * x;
  const ScaledValue weight = ScaledValue::exp(-0.5 * y * y);
  detail::ScaledPair pair;
  pair.prev = 0.0;
  pair.cur = weight.mantissa();
  pair.exponent = weight.exponent();
  double acc = coeffs_[0] * pair.cur;
  const int top = 4 * max_index();
  for (int k = 0; k < top; ++k) {
    const double next = 2.0 * y * pair.cur - 2.0 * k * pair.prev;
    pair.prev = pair.cur;
    pair.cur = next;
    const int shift = pair.rebalance();
    if (shift != 0) acc = std::ldexp(acc, -shift);
    if ((k + 1) % 4 == 0) acc += coeffs_[static_cast<std::size_t>((k + 1) / 4)] * pair.cur;
  }
  return ScaledValue::from_parts(acc, pair.exponent);
}

double EigenPlusFunction::eval(double x) const { return eval_scaled(x).to_double(); }

double EigenPlusFunction::value_at_zero() const {
  ScaledValue sum;
  for (int n = 0; n <= max_index(); ++n) {
    sum += ScaledValue(coeffs_[static_cast<std::size_t>(n)]) * hermite_4n_at_zero(n);
  }
  return sum.to_double();
}

EigenPlusFunction EigenPlusFunction::normalized_by(int pivot) const {
  if (pivot < 0 || pivot > max_index()) throw DomainError("normalized_by: pivot index out of range");
  ScaledValue rest;
  for (int n = 0; n <= max_index(); ++n) {
    if (n == pivot) continue;
    rest += ScaledValue(coeffs_[static_cast<std::size_t>(n)]) * hermite_4n_at_zero(n);
  }
  auto out = coeffs_;
  out[static_cast<std::size_t>(pivot)] = (-rest / hermite_4n_at_zero(pivot)).to_double();
  return EigenPlusFunction(std::move(out), true);
}

std::vector<double> EigenPlusFunction::monomial_coeffs() const {
  const int top = 4 * max_index();
  std::vector<double> p(static_cast<std::size_t>(top) + 1, 0.0);
  std::vector<double> prev;
  std::vector<double> cur{1.0};
  p[0] += coeffs_[0];
  for (int k = 0; k < top; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2.0 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
    if ((k + 1) % 4 == 0) {
      const double a = coeffs_[static_cast<std::size_t>((k + 1) / 4)];
      for (std::size_t i = 0; i < cur.size(); ++i) p[i] += a * cur[i];
    }
  }
  for (double v : p) {
    if (!std::isfinite(v)) throw RangeError("monomial_coeffs: Hermite coefficients overflow; reduce N");
  }
  return p;
}

double EigenPlusFunction::envelope() const {
  const auto p = monomial_coeffs();
  double c = std::fabs(p[0]);
  for (std::size_t k = 1; k < p.size(); ++k) {
    if (p[k] == 0.0) continue;
    const double kk = static_cast<double>(k);
    c += std::exp(std::log(std::fabs(p[k])) + 0.5 * kk * std::log(2.0 * kk / std::numbers::e));
  }
  return std::max(c, 1e-300);
}

Integrand EigenPlusFunction::integrand() const {
  auto self = *this;
  return Integrand{[self](double x) { return self.eval(x); }, DecayClass::GaussianTail, envelope()};
}

EigenPlusFunction paper_candidate() {
  const double a0 = -113.0 / 100.0;
  const double a1 = 1.0 / 25.0;
  const double a2 = 1.0 / 3240.0;
  const double a3 = 71.0 / 359251200.0;  // (-a0 - 12 a1 - 1680 a2) / 665280
  return EigenPlusFunction({a0, a1, a2, a3}, true);
}

double tail_bound(const EigenPlusFunction& f) {
  const auto p = f.monomial_coeffs();
  int top = -1;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    if (p[static_cast<std::size_t>(k)] != 0.0) {
      top = k;
      break;
    }
  }
  if (top < 0) throw DomainError("root_certificate: all coefficients are zero");
  if (p[static_cast<std::size_t>(top)] < 0.0) {
    throw NegativeAtInfinityError("root_certificate: leading coefficient is negative, f < 0 near infinity");
  }
  int last_negative = -1;
  for (int k = 0; k <= top; ++k) {
    if (p[static_cast<std::size_t>(k)] < 0.0) last_negative = k;
  }
  if (last_negative < 0) return 0.0;

  // P(y) >= y^K G(y) for y > 0 and G is increasing, so G(Y) > 0 certifies P > 0 on [Y, inf).
  const auto g = [&](double y) {
    double sum = 0.0;
    for (int k = 0; k <= top; ++k) {
      const double c = p[static_cast<std::size_t>(k)];
      if (k > last_negative || c < 0.0) sum += c * std::pow(y, k - last_negative);
    }
    return sum;
  };
  double hi = 1.0;
  while (!(g(hi) > 0.0)) {
    hi *= 2.0;
    if (hi > 1e8) throw InternalError("tail_bound: no domination radius below 1e8");
  }
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi / kSqrt2Pi;
}

namespace {

using Fn = std::function<ScaledValue(double)>;

double bisect_root(const Fn& f, double lo, double hi, double tol) {
  const int slo = f(lo).sign();
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const int s = f(mid).sign();
    if (s == 0) return mid;
    if (s == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::pair<double, ScaledValue> golden_minimum(const Fn& f, double lo, double hi) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  ScaledValue f1 = f(x1);
  ScaledValue f2 = f(x2);
  for (int i = 0; i < 200 && hi - lo > 1e-11; ++i) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace

RootCertificate root_certificate(const EigenPlusFunction& f, const RootScanOptions& options) {
  if (!(options.grid_step > 0.0) || !(options.tol > 0.0)) {
    throw DomainError("root_certificate: requires grid_step > 0 and tol > 0");
  }
  RootCertificate cert;
  cert.scan_bound = tail_bound(f);
  const Fn value = [&f](double x) { return f.eval_scaled(x); };

  const double scan_to = std::max(cert.scan_bound, options.grid_step);
  const int steps = static_cast<int>(std::ceil(scan_to / options.grid_step));
  std::vector<double> xs(static_cast<std::size_t>(steps) + 1);
  std::vector<ScaledValue> vs(xs.size());
  ScaledValue max_abs;
  for (int i = 0; i <= steps; ++i) {
    const double x = i == steps ? scan_to : i * options.grid_step;
    xs[static_cast<std::size_t>(i)] = x;
    vs[static_cast<std::size_t>(i)] = (i == 0 && f.normalized()) ? ScaledValue() : value(x);
    max_abs = std::max(max_abs, vs[static_cast<std::size_t>(i)].abs(),
                       [](const ScaledValue& a, const ScaledValue& b) { return a < b; });
  }

  std::vector<double> sign_changes;
  for (int i = 0; i < steps; ++i) {
    const auto& a = vs[static_cast<std::size_t>(i)];
    const auto& b = vs[static_cast<std::size_t>(i) + 1];
    if (b.is_zero() && i + 1 < steps) {
      const int before = a.sign();
      const int after = vs[static_cast<std::size_t>(i) + 2].sign();
      if (before * after < 0) sign_changes.push_back(xs[static_cast<std::size_t>(i) + 1]);
      continue;
    }
    if (a.sign() * b.sign() < 0) {
      sign_changes.push_back(bisect_root(value, xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(i) + 1], options.tol));
    }
  }

  const ScaledValue near_threshold = max_abs * ScaledValue(options.near_double_relative);
  for (int i = 1; i < steps; ++i) {
    const auto& left = vs[static_cast<std::size_t>(i) - 1];
    const auto& mid = vs[static_cast<std::size_t>(i)];
    const auto& right = vs[static_cast<std::size_t>(i) + 1];
    if (!(mid.sign() > 0 && left.sign() > 0 && right.sign() > 0)) continue;
    if (!(mid <= left && mid <= right)) continue;
    const double lo = xs[static_cast<std::size_t>(i) - 1];
    const double hi = xs[static_cast<std::size_t>(i) + 1];
    const auto [where, minimum] = golden_minimum(value, lo, hi);
    const double m = minimum.to_double();
    if (std::fabs(m) <= options.double_root_threshold) {
      cert.double_roots.push_back({where, m});
    } else if (minimum.sign() < 0) {
      sign_changes.push_back(bisect_root(value, lo, where, options.tol));
      sign_changes.push_back(bisect_root(value, where, hi, options.tol));
    } else if (minimum <= near_threshold) {
      cert.near_double_roots.push_back({where, m});
    }
  }

  std::sort(sign_changes.begin(), sign_changes.end());
  // x = 0 is a root of every normalized f; only positive roots are listed.
  std::erase_if(sign_changes, [&](double r) { return r <= options.tol; });
  cert.largest_root = sign_changes.empty() ? 0.0 : sign_changes.back();
  cert.roots = sign_changes;
  for (const auto& d : cert.double_roots) cert.roots.push_back(d.location);
  std::sort(cert.roots.begin(), cert.roots.end());
  return cert;
}

std::vector<double> phi_sequence(int n_max, double x) {
  if (n_max < 0) throw DomainError("phi: requires n >= 0");
  const auto weighted = hermite_weighted_sequence(4 * n_max + 4, kSqrt2Pi * x);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  ScaledValue at_zero(1.0);
  ScaledValue ratio_n = weighted[0];
  for (int n = 0; n <= n_max; ++n) {
    const double k = 4.0 * n;
    at_zero *= ScaledValue((k + 1.0) * (k + 2.0) * (k + 3.0) * (k + 4.0) / ((2.0 * n + 1.0) * (2.0 * n + 2.0)));
    const ScaledValue ratio_next = weighted[static_cast<std::size_t>(4 * n + 4)] / at_zero;
    out[static_cast<std::size_t>(n)] = (ratio_next - ratio_n).to_double();
    ratio_n = ratio_next;
  }
  return out;
}

double phi(int n, double x) { return phi_sequence(n, x).back(); }

namespace {

// Roots of f, or of -f when f is eventually negative.
RootCertificate any_sign_roots(const EigenPlusFunction& f) {
  try {
    return root_certificate(f);
  } catch (const NegativeAtInfinityError&) {
    auto c = f.coeffs();
    for (auto& v : c) v = -v;
    return root_certificate(EigenPlusFunction(std::move(c), f.normalized()));
  }
}

}  // namespace

SignSplit sign_split_integrals(const EigenPlusFunction& f, double tol) {
  const auto cert = any_sign_roots(f);
  const Integrand g = f.integrand();
  const double radius = gaussian_radius(g.envelope, tol);
  std::vector<double> cuts{0.0};
  for (double r : cert.roots) {
    if (r < radius) cuts.push_back(r);
  }
  cuts.push_back(radius);
  QuadratureOptions options;
  options.tol = 0.25 * tol / static_cast<double>(cuts.size());
  options.max_panel_width = 0.5;
  SignSplit out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double piece = 2.0 * integrate_adaptive(g, cuts[i], cuts[i + 1], options).value;
    if (piece >= 0.0) {
      out.positive += piece;
    } else {
      out.negative += piece;
    }
  }
  return out;
}

double l1_norm(const EigenPlusFunction& f, double tol) {
  const auto split = sign_split_integrals(f, tol);
  return split.positive - split.negative;
}

double integral(const EigenPlusFunction& f, double tol) { return integrate_line(f.integrand(), tol); }

}  // namespace frl
