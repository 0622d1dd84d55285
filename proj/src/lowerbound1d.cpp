#include "frl/lowerbound1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "frl/errors.hpp"
#include "frl/quadrature.hpp"

namespace frl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGridStep = 1e-3;

void require_A(double A) {
  if (!(A > 0.25 && A <= 0.5)) throw DomainError("lower bound: requires 1/4 < A <= 1/2");
}

void require_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 0.25)) throw DomainError("lower bound: requires 0 <= tau <= 1/4");
}

template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
  const bool low_positive = f(lo) > 0.0;
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0.0) == low_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

IntervalSet::IntervalSet(std::vector<std::pair<double, double>> intervals) {
  for (const auto& [l, r] : intervals) {
    if (!(l <= r) || !std::isfinite(l) || !std::isfinite(r)) throw DomainError("IntervalSet: bad interval");
  }
  std::sort(intervals.begin(), intervals.end());
  for (const auto& iv : intervals) {
    if (iv.second == iv.first) continue;
    if (!intervals_.empty() && iv.first <= intervals_.back().second) {
      intervals_.back().second = std::max(intervals_.back().second, iv.second);
    } else {
      intervals_.push_back(iv);
    }
  }
  for (const auto& [l, r] : intervals_) measure_ += r - l;
}

IntervalSet IntervalSet::symmetrized() const {
  auto all = intervals_;
  for (const auto& [l, r] : intervals_) all.emplace_back(-r, -l);
  return IntervalSet(std::move(all));
}

double upsilon(double A, double x) {
  const double a = 2.0 * kPi * A;
  const double ax = a * x;
  const double sinc = std::fabs(ax) < 1e-4 ? A * (1.0 - ax * ax / 6.0) : std::sin(ax) / (2.0 * kPi * x);
  return sinc + kUpsilonWeight * (8.0 * kPi * x * x - 2.0) * std::exp(-kPi * x * x);
}

double upsilon_derivative(double A, double x) {
  const double a = 2.0 * kPi * A;
  const double ax = a * x;
  const double sinc = std::fabs(ax) < 1e-4 ? -A * a * a * x / 3.0
                                           : (ax * std::cos(ax) - std::sin(ax)) / (2.0 * kPi * x * x);
  return sinc + kUpsilonWeight * std::exp(-kPi * x * x) * (20.0 * kPi * x - 16.0 * kPi * kPi * x * x * x);
}

double pointwise_ub(double A, double x) {
  if (!(A > 0.0 && A <= 0.5) || !(x >= 0.0 && x <= A)) {
    throw DomainError("pointwise_ub: requires 0 <= x <= A <= 1/2");
  }
  const double b = A - 0.25;
  if (x < 1e-6) {
    // sin(2 pi b x) - sin(2 pi A x) over pi x, to third order
    const double t = kPi * kPi * x * x * 2.0 / 3.0;
    return 0.5 + 2.0 * b * (1.0 - t * b * b) - 2.0 * A * (1.0 - t * A * A);
  }
  return 0.5 + (std::sin(2.0 * kPi * b * x) - std::sin(2.0 * kPi * A * x)) / (kPi * x);
}

double tau_ub(double A) {
  if (!(A >= 0.25 && A <= 0.5)) throw DomainError("tau_ub: requires 1/4 <= A <= 1/2");
  if (A == 0.25) return 0.0;
  const Integrand f{[A](double x) { return pointwise_ub(A, x); }, DecayClass::Compact, 1.0};
  return integrate(f, 0.25, A, 1e-10);
}

UpsilonProfile::UpsilonProfile(double A, LevelDomain domain) : A_(A), domain_(domain) {
  require_A(A);
  if (domain == LevelDomain::Inner) {
    breaks_.push_back(0.0);
    covered_ = 0.0;
    extend_to(A);
  } else {
    breaks_.push_back(A);
    covered_ = A;
    extend_to(6.0);
  }
}

void UpsilonProfile::extend_to(double x) {
  if (x <= covered_) return;
  const auto d = [this](double t) { return upsilon_derivative(A_, t); };
  double lo = covered_;
  double dlo = d(lo == 0.0 ? kGridStep * 1e-3 : lo);
  while (lo < x) {
    const double hi = std::min(lo + kGridStep, x);
    const double dhi = d(hi);
    if (dlo != 0.0 && dhi != 0.0 && (dlo > 0.0) != (dhi > 0.0)) breaks_.push_back(bisect(d, lo, hi, 1e-14));
    lo = hi;
    dlo = dhi;
  }
  covered_ = x;
}

IntervalSet UpsilonProfile::half_set(double c, LevelSide side) {
  if (domain_ == LevelDomain::Outer) {
    if (side == LevelSide::Above || !(c < 0.0)) {
      throw DomainError("outer level set: only sublevel sets with c < 0 have finite measure");
    }
    extend_to(std::max(6.0, 1.0 / (2.0 * kPi * -c)) + kGridStep);
  }
  const double end = domain_ == LevelDomain::Inner ? A_ : covered_;
  const auto inside = [&](double v) { return side == LevelSide::Below ? v <= c : v >= c; };
  const auto shifted = [&](double t) { return upsilon(A_, t) - c; };
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    const double l = breaks_[i];
    const double r = i + 1 < breaks_.size() ? breaks_[i + 1] : end;
    if (r <= l) continue;
    const bool in_l = inside(upsilon(A_, l));
    const bool in_r = inside(upsilon(A_, r));
    if (in_l && in_r) {
      out.emplace_back(l, r);
    } else if (in_l != in_r) {
      const double t = bisect(shifted, l, r, 1e-14);
      if (in_l) {
        out.emplace_back(l, t);
      } else {
        out.emplace_back(t, r);
      }
    }
  }
  return IntervalSet(std::move(out));
}

double UpsilonProfile::half_measure(double c, LevelSide side) { return half_set(c, side).measure(); }

LevelSet UpsilonProfile::optimal(double target, LevelSide side) {
  if (!(target >= 0.0) || !std::isfinite(target)) throw DomainError("optimal level set: target measure must be >= 0");
  const double half = 0.5 * target;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double b : breaks_) {
    lo = std::min(lo, upsilon(A_, b));
    hi = std::max(hi, upsilon(A_, b));
  }
  if (domain_ == LevelDomain::Inner) {
    lo = std::min(lo, upsilon(A_, A_));
    hi = std::max(hi, upsilon(A_, A_));
    if (half > A_ + 1e-12) throw DomainError("optimal level set: target exceeds the measure of [-A, A]");
  } else {
    if (side == LevelSide::Above) throw DomainError("optimal level set: outer superlevel sets are unbounded");
    hi = -0.01;
    while (half_measure(hi, side) < half) {
      hi *= 0.1;
      if (hi > -1e-12) throw DomainError("optimal level set: target measure not reachable");
    }
  }
  // bisect on the level
  const auto enough = [&](double c) { return half_measure(c, side) >= half; };
  double below = side == LevelSide::Below ? lo : hi;  // measure ~ 0 here
  double above = side == LevelSide::Below ? hi : lo;  // measure is full or enough here
  LevelSet out;
  if (half <= 0.0) {
    out.level = below;
    return out;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (below + above);
    if (mid == below || mid == above) break;
    if (enough(mid)) {
      above = mid;
    } else {
      below = mid;
    }
  }
  out.level = above;
  const IntervalSet half_set_found = half_set(above, side);
  const Integrand g{[this](double t) { return upsilon(A_, t); }, DecayClass::Compact, 1.0};
  double sum = 0.0;
  for (const auto& [l, r] : half_set_found.intervals()) sum += integrate(g, l, r, 1e-13);
  out.integral = 2.0 * sum;
  out.set = half_set_found.symmetrized();
  return out;
}

LevelSet optimal_sublevel(double A, LevelDomain domain, double target) {
  UpsilonProfile profile(A, domain);
  return profile.optimal(target, LevelSide::Below);
}

double h1(double A, double tau) {
  require_A(A);
  require_tau(tau);
  if (tau == 0.0) return 0.0;
  return optimal_sublevel(A, LevelDomain::Inner, 2.0 * tau).integral;
}

double h2(double A, double tau) {
  require_A(A);
  require_tau(tau);
  return optimal_sublevel(A, LevelDomain::Outer, 0.5 - 2.0 * tau).integral;
}

double sup_term(double A) {
  require_A(A);
  UpsilonProfile profile(A, LevelDomain::Inner);
  return profile.optimal(0.5, LevelSide::Above).integral;
}

InequalityCheck check_inequality(double A, double tau) {
  InequalityCheck out;
  out.lhs = -0.25 + tau;
  out.h1 = h1(A, tau);
  out.h2 = h2(A, tau);
  out.sup = sup_term(A);
  out.margin = out.lhs - (out.h1 + out.h2 - out.sup);
  return out;
}

std::vector<DerivativeSample> h_derivatives(double A, const std::vector<double>& taus, double step) {
  if (!(step > 0.0)) throw DomainError("h_derivatives: step must be > 0");
  std::vector<DerivativeSample> out;
  for (double tau : taus) {
    require_tau(tau);
    const double lo = std::max(0.0, tau - step);
    const double hi = std::min(0.25, tau + step);
    out.push_back({tau, (h1(A, hi) - h1(A, lo)) / (hi - lo), (h2(A, hi) - h2(A, lo)) / (hi - lo)});
  }
  return out;
}

UpsilonBoundCheck check_upsilon_bounds(double A, int points, double x_max) {
  if (points < 2 || !(x_max > 0.0)) throw DomainError("check_upsilon_bounds: need >= 2 points and x_max > 0");
  UpsilonBoundCheck out{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (int i = 0; i < points; ++i) {
    const double x = x_max * i / (points - 1);
    const double v = upsilon(A, x);
    if (x <= 0.1) out.max_near_zero = std::max(out.max_near_zero, v);
    if (x < 1.4 || x > 1.8) out.min_off_window = std::min(out.min_off_window, v);
  }
  return out;
}

}  // namespace frl
