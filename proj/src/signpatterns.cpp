#include "frl/signpatterns.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "frl/eigenfunction.hpp"
#include "frl/errors.hpp"
#include "frl/parallel.hpp"
#include "frl/scaled_value.hpp"
#include "frl/specfun.hpp"

namespace frl {

namespace {

constexpr double kPi = std::numbers::pi;

char symbol(Sign s) { return s == Sign::Plus ? '+' : '-'; }

void require_points(const std::vector<double>& points) {
  if (points.empty()) throw DomainError("sign search: needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] > 0.0) || !std::isfinite(points[i])) throw DomainError("sign search: points must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) throw DomainError("sign search: points must be distinct");
    }
  }
}

void require_range(int n_min, int n_max) {
  if (n_min < 0 || n_max < n_min) throw DomainError("sign search: requires 0 <= n_min <= n_max");
}

// values[j][i] and scales[j][i] for point j and n = n_min + i; a value is signed only if
// |value| >= kSignUncertain * scale.
struct Table {
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> scales;
};

SearchOutcome classify(const Table& table, int n_min, const std::vector<Sign>* wanted,
                       const std::function<bool(int)>& predictor) {
  SearchOutcome out;
  const std::size_t k = table.values.size();
  const std::size_t count = table.values.front().size();
  for (std::size_t i = 0; i < count; ++i) {
    const int n = n_min + static_cast<int>(i);
    std::string key;
    bool uncertain = false;
    for (std::size_t j = 0; j < k; ++j) {
      const double v = table.values[j][i];
      if (!(std::fabs(v) >= kSignUncertain * table.scales[j][i])) {
        uncertain = true;
        break;
      }
      key.push_back(v > 0.0 ? '+' : '-');
    }
    if (predictor(n)) out.predictor_matches.push_back(n);
    if (uncertain) {
      out.uncertain.push_back(n);
      continue;
    }
    ++out.pattern_counts[key];
    bool match = true;
    for (std::size_t j = 0; j < k && match; ++j) match = key[j] == symbol((*wanted)[j]);
    if (match) out.matches.push_back(n);
  }
  return out;
}

}  // namespace

SignPattern::SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw DomainError("SignPattern: needs at least one sign");
}

SignPattern SignPattern::parse(const std::string& text) {
  std::vector<Sign> signs;
  for (char c : text) {
    if (c == '+') {
      signs.push_back(Sign::Plus);
    } else if (c == '-') {
      signs.push_back(Sign::Minus);
    } else if (c != ',' && c != ' ') {
      throw DomainError(std::string("SignPattern: unexpected character '") + c + "'");
    }
  }
  return SignPattern(std::move(signs));
}

std::string SignPattern::to_string() const {
  std::string out;
  for (Sign s : signs_) out.push_back(symbol(s));
  return out;
}

void FlowSpec::validate() const {
  if (direction.empty()) throw DomainError("FlowSpec: direction must be nonempty");
  for (double a : direction) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("FlowSpec: direction components must be positive and finite");
  }
  if (!(epsilon > 0.0 && epsilon < kPi)) throw DomainError("FlowSpec: requires 0 < epsilon < pi");
  if (n_max < 1) throw DomainError("FlowSpec: requires n_max >= 1");
}

double torus_distance(const std::vector<double>& direction, long n) {
  double sum = 0.0;
  for (double a : direction) {
    double r = std::remainder(static_cast<double>(n) * a, 2.0 * kPi);
    if (r == -kPi) r = kPi;
    sum += r * r;
  }
  return std::sqrt(sum);
}

std::vector<long> torus_return_times(const FlowSpec& spec) {
  spec.validate();
  std::vector<long> out;
  for (long n = 1; n <= spec.n_max; ++n) {
    if (torus_distance(spec.direction, n) <= spec.epsilon) out.push_back(n);
  }
  return out;
}

SearchOutcome hermite_sign_search(const std::vector<double>& points, const SignPattern& pattern, int n_max,
                                  int n_min, int degree_offset) {
  require_points(points);
  require_range(n_min, n_max);
  if (pattern.size() != points.size()) throw DomainError("hermite_sign_search: pattern length must equal point count");
  if (degree_offset != 0 && degree_offset != 2) throw DomainError("hermite_sign_search: degree offset must be 0 or 2");

  const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
  Table table{std::vector<std::vector<double>>(points.size()), std::vector<std::vector<double>>(points.size())};
  parallel_for(points.size(), [&](std::size_t j) {
    const auto seq = hermite_weighted_sequence(4 * n_max + degree_offset, points[j]);
    // |H_m(0)| = m! / (m/2)!, advanced from m = offset in steps of 4
    ScaledValue at_zero(degree_offset == 0 ? 1.0 : 2.0);
    auto& values = table.values[j];
    auto& scales = table.scales[j];
    values.reserve(count);
    scales.assign(count, 1.0);
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) {
        const double m = 4.0 * (n - 1) + degree_offset;
        at_zero *= ScaledValue((m + 1.0) * (m + 2.0) * (m + 3.0) * (m + 4.0) / ((0.5 * m + 1.0) * (0.5 * m + 2.0)));
      }
      if (n < n_min) continue;
      values.push_back((seq[static_cast<std::size_t>(4 * n + degree_offset)] / at_zero).to_double());
    }
  });
  const auto predictor = [&](int n) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      const double p = degree_offset == 0 ? std::cos(std::sqrt(8.0 * n + 1.0) * points[j])
                                          : -std::cos(std::sqrt(8.0 * n + 5.0) * points[j]);
      if ((p > 0.0) != (pattern[j] == Sign::Plus) || p == 0.0) return false;
    }
    return true;
  };
  return classify(table, n_min, &pattern.signs(), predictor);
}

double phi_predictor(int n, double x) {
  return -std::sin(4.0 * std::sqrt(kPi * n) * x) * 4.0 * std::sqrt(2.0 * kPi) * x / std::sqrt(8.0 * n + 1.0);
}

SearchOutcome phi_sign_search(const std::vector<double>& points, int n_max, int n_min) {
  require_points(points);
  require_range(n_min, n_max);
  const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
  Table table{std::vector<std::vector<double>>(points.size()), std::vector<std::vector<double>>(points.size())};
  parallel_for(points.size(), [&](std::size_t j) {
    const auto seq = phi_sequence(n_max, points[j]);
    table.values[j].assign(seq.begin() + n_min, seq.end());
    table.scales[j].assign(count, 1.0);
  });
  // Matching demands phi_n(a_j) > 1e-13, so a value in (-1e-13, 1e-13] counts as uncertain.
  const std::vector<Sign> wanted(points.size(), Sign::Plus);
  const auto predictor = [&](int n) {
    for (double a : points) {
      if (!(phi_predictor(n, a) > 0.0)) return false;
    }
    return true;
  };
  return classify(table, n_min, &wanted, predictor);
}

LaguerreOutcome laguerre_sign_search(double nu, const std::vector<double>& points, int n_max, int n_min) {
  if (!(nu > -1.0) || !std::isfinite(nu)) throw DomainError("laguerre_sign_search: requires nu > -1");
  if (std::fabs(std::remainder(nu + 0.5 - 1.0, 2.0)) < 1e-12) {
    throw DomainError("laguerre_sign_search: nu + 1/2 must not be an odd integer");
  }
  require_points(points);
  require_range(n_min, n_max);
  const double phase = 0.5 * kPi * (nu + 0.5);
  LaguerreOutcome out;
  out.expected = std::cos(phase) > 0.0 ? Sign::Plus : Sign::Minus;

  const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
  Table table{std::vector<std::vector<double>>(points.size()), std::vector<std::vector<double>>(points.size())};
  parallel_for(points.size(), [&](std::size_t j) {
    const auto seq = laguerre_sequence(n_max, nu, points[j]);
    auto& values = table.values[j];
    auto& scales = table.scales[j];
    values.reserve(count);
    scales.reserve(count);
    for (int n = n_min; n <= n_max; ++n) {
      const ScaledValue cur = seq[static_cast<std::size_t>(n)];
      const ScaledValue prev = n > 0 ? seq[static_cast<std::size_t>(n - 1)] : ScaledValue();
      const ScaledValue scale = (cur * cur + prev * prev).sqrt();
      // values in units of the local scale
      values.push_back(scale.is_zero() ? 0.0 : (cur / scale).to_double());
      scales.push_back(1.0);
    }
  });
  const std::vector<Sign> wanted(points.size(), out.expected);
  const auto predictor = [&](int n) {
    for (double a : points) {
      const double p = std::cos(2.0 * std::sqrt(n * a) - phase);
      if ((p > 0.0) != (out.expected == Sign::Plus) || p == 0.0) return false;
    }
    return true;
  };
  out.search = classify(table, n_min, &wanted, predictor);
  return out;
}

ObstructionPrediction obstruction_predictor(double y) {
  if (!std::isfinite(y)) throw DomainError("obstruction_predictor: y must be finite");
  ObstructionPrediction out;
  const auto outside = [](double f) { return f < 0.25 || f > 0.75; };
  for (int k = 1; k <= 4; ++k) {
    const double v = k * y;
    out.frac[k - 1] = v - std::floor(v);
    out.pattern.push_back(outside(out.frac[k - 1]) ? '+' : '-');
  }
  out.outer_conditions = outside(out.frac[0]) && outside(out.frac[1]) && outside(out.frac[3]);
  const double t = out.frac[2];
  out.third_excluded = t < 3.0 / 16.0 || t > 13.0 / 16.0;
  out.third_distance = t < 0.25 ? 0.25 - t : (t > 0.75 ? t - 0.75 : 0.0);
  return out;
}

}  // namespace frl
