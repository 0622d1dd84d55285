#pragma once

#include <utility>
#include <vector>

namespace frl {

// Finite disjoint union of closed intervals, kept sorted and merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<std::pair<double, double>> intervals);

  const std::vector<std::pair<double, double>>& intervals() const { return intervals_; }
  double measure() const { return measure_; }
  bool empty() const { return intervals_.empty(); }

  // The set together with its reflection in 0.
  IntervalSet symmetrized() const;

 private:
  std::vector<std::pair<double, double>> intervals_;
  double measure_ = 0.0;
};

inline constexpr double kUpsilonWeight = 13.0 / 400.0;

// sin(2 pi A x)/(2 pi x) + (13/400)(8 pi x^2 - 2) e^{-pi x^2}
double upsilon(double A, double x);
double upsilon_derivative(double A, double x);

// 1/2 + (sin(2 pi (A - 1/4) x) - sin(2 pi A x)) / (pi x), for 0 <= x <= A <= 1/2
double pointwise_ub(double A, double x);

// Integral of pointwise_ub(A, .) over [1/4, A].
double tau_ub(double A);

enum class LevelDomain { Inner, Outer };
enum class LevelSide { Below, Above };

struct LevelSet {
  IntervalSet set;  // symmetric, both half-lines
  double level = 0.0;
  double integral = 0.0;  // of upsilon over the set
};

// Stationary points and level sets of upsilon on [0, A] (Inner) or [A, inf) (Outer).
class UpsilonProfile {
 public:
  UpsilonProfile(double A, LevelDomain domain);

  double A() const { return A_; }
  LevelDomain domain() const { return domain_; }

  // {upsilon <= c} (Below) or {upsilon >= c} (Above) on the positive part of the domain.
  IntervalSet half_set(double c, LevelSide side);
  double half_measure(double c, LevelSide side);

  // Symmetric optimal set of total measure `target` and the integral of upsilon over it.
  LevelSet optimal(double target, LevelSide side);

  // Segment endpoints: the domain ends plus every stationary point up to `reach`.
  const std::vector<double>& breakpoints() const { return breaks_; }

 private:
  void extend_to(double x);

  double A_;
  LevelDomain domain_;
  std::vector<double> breaks_;
  double covered_ = 0.0;
};

// Sublevel set of upsilon on the domain with total measure `target`.
LevelSet optimal_sublevel(double A, LevelDomain domain, double target);

double h1(double A, double tau);
double h2(double A, double tau);
double sup_term(double A);

struct InequalityCheck {
  double lhs = 0.0;  // -1/4 + tau
  double h1 = 0.0;
  double h2 = 0.0;
  double sup = 0.0;
  double margin = 0.0;  // lhs - (h1 + h2 - sup)
  bool holds() const { return margin >= 0.0; }
};

InequalityCheck check_inequality(double A, double tau);

struct DerivativeSample {
  double tau = 0.0;
  double dh1 = 0.0;
  double dh2 = 0.0;
};

// Finite-difference dh1/dtau and dh2/dtau at each tau (central, one-sided at tau = 0).
std::vector<DerivativeSample> h_derivatives(double A, const std::vector<double>& taus, double step = 1e-4);

struct UpsilonBoundCheck {
  double max_near_zero = 0.0;   // max over [0, 1/10]
  double min_off_window = 0.0;  // min over [0, x_max] minus [7/5, 9/5]
  bool holds() const { return max_near_zero <= 0.39 && min_off_window >= -0.09; }
};

UpsilonBoundCheck check_upsilon_bounds(double A, int points, double x_max = 10.0);

}  // namespace frl
