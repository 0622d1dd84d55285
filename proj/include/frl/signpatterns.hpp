#pragma once

#include <map>
#include <string>
#include <vector>

namespace frl {

enum class Sign { Plus, Minus };

class SignPattern {
 public:
  explicit SignPattern(std::vector<Sign> signs);
  // "+,+,-" or "++-"
  static SignPattern parse(const std::string& text);

  std::size_t size() const { return signs_.size(); }
  Sign operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<Sign>& signs() const { return signs_; }
  std::string to_string() const;

 private:
  std::vector<Sign> signs_;
};

struct FlowSpec {
  std::vector<double> direction;
  double epsilon = 0.1;
  long n_max = 1000;

  void validate() const;
};

// n in 1..n_max with |n a mod 2 pi| <= epsilon, each coordinate reduced to (-pi, pi].
std::vector<long> torus_return_times(const FlowSpec& spec);
// Euclidean norm of the reduced point n a.
double torus_distance(const std::vector<double>& direction, long n);

inline constexpr double kSignUncertain = 1e-13;

struct SearchOutcome {
  std::vector<int> matches;
  std::vector<int> predictor_matches;
  std::vector<int> uncertain;  // n where some value was too small to sign
  std::map<std::string, long> pattern_counts;  // over the n without uncertain values
};

// Signs of H_{4n + offset}(a_j), offset 0 or 2, for n in [n_min, n_max].
// Predictor: cos(sqrt(8n+1) a) for offset 0, -cos(sqrt(8n+5) a) for offset 2.
SearchOutcome hermite_sign_search(const std::vector<double>& points, const SignPattern& pattern, int n_max,
                                  int n_min = 0, int degree_offset = 0);

// -sin(4 sqrt(pi n) x) 4 sqrt(2 pi) x / sqrt(8n+1)
double phi_predictor(int n, double x);

// n with phi_n(a_j) > 1e-13 for every j; pattern_counts key the signs of phi_n at the points.
SearchOutcome phi_sign_search(const std::vector<double>& points, int n_max, int n_min = 0);

struct LaguerreOutcome {
  Sign expected = Sign::Plus;
  SearchOutcome search;
};

// n with sgn L_n^nu(a_j) = sgn cos(pi (nu + 1/2) / 2) for all j.
LaguerreOutcome laguerre_sign_search(double nu, const std::vector<double>& points, int n_max, int n_min = 0);

struct ObstructionPrediction {
  double frac[4] = {0, 0, 0, 0};  // {y}, {2y}, {3y}, {4y}
  std::string pattern;             // signs of cos(2 pi k y), k = 1..4
  bool outer_conditions = false;   // {y}, {2y}, {4y} all outside [1/4, 3/4]
  bool third_excluded = false;     // {3y} in [0, 3/16) or (13/16, 1)
  double third_distance = 0.0;     // distance from {3y} to [1/4, 3/4]
};

ObstructionPrediction obstruction_predictor(double y);

}  // namespace frl
