#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "frl/eigenfunction.hpp"
#include "frl/errors.hpp"
#include "frl/signpatterns.hpp"
#include "frl/specfun.hpp"

using namespace frl;
using std::numbers::pi;

TEST_SUITE("signpatterns") {
  TEST_CASE("patterns parse") {
    CHECK(SignPattern::parse("+,+,-").to_string() == "++-");
    CHECK(SignPattern::parse("-+").size() == 2);
    CHECK_THROWS_AS(SignPattern::parse("+,x"), DomainError);
  }

  TEST_CASE("torus return times") {
    FlowSpec all{{2 * pi}, 0.05, 100};
    CHECK(torus_return_times(all).size() == 100);
    FlowSpec half{{pi}, 0.01, 200};
    const auto even = torus_return_times(half);
    CHECK(even.size() == 100);
    for (long n : even) CHECK(n % 2 == 0);

    FlowSpec two{{1.0, std::sqrt(2.0)}, 0.1, 1000000};
    const auto times = torus_return_times(two);
    REQUIRE_FALSE(times.empty());
    long first = 0;
    for (long n = 1; n <= 1000000 && first == 0; ++n) {
      bool ok = true;
      for (double a : {1.0, std::sqrt(2.0)}) ok = ok && std::fabs(std::remainder(n * a, 2 * pi)) <= 0.1;
      if (ok) first = n;
    }
    CHECK(times.front() == first);
    for (long n : times) CHECK(torus_distance(two.direction, n) <= 0.1 * std::sqrt(2.0));
    CHECK_THROWS_AS(torus_return_times(FlowSpec{{}, 0.1, 10}), DomainError);
  }

  TEST_CASE("all-positive and all-negative Hermite patterns") {
    const auto plus = hermite_sign_search({1, 2, 3}, SignPattern::parse("+++"), 2000);
    CHECK_FALSE(plus.matches.empty());
    for (int n : std::vector<int>(plus.matches.begin(), plus.matches.begin() + std::min<std::size_t>(5, plus.matches.size()))) {
      for (double a : {1.0, 2.0, 3.0}) CHECK(hermite_weighted(4 * n, a).sign() > 0);
    }
    const auto minus = hermite_sign_search({1, 2, 3}, SignPattern::parse("---"), 2000, 0, 2);
    CHECK_FALSE(minus.matches.empty());
    for (int n : minus.matches) {
      if (n > 40) break;
      for (double a : {1.0, 2.0, 3.0}) CHECK(hermite_weighted(4 * n + 2, a).sign() < 0);
    }
    long total = 0;
    for (const auto& [key, count] : plus.pattern_counts) total += count;
    CHECK(total + static_cast<long>(plus.uncertain.size()) == 2001);
  }

  TEST_CASE("obstructed pattern never occurs") {
    const auto hits = hermite_sign_search({1, 2, 3, 4}, SignPattern::parse("++-+"), 5000, 50);
    CHECK(hits.matches.empty());
  }

  TEST_CASE("obstruction predictor") {
    for (double y : {0.0, 0.01, 0.03, 0.06, 1.02}) {
      const auto p = obstruction_predictor(y);
      CHECK(p.third_excluded);
    }
    CHECK(obstruction_predictor(0.0).pattern == "++++");
    double worst = 1.0;
    for (int i = 0; i < 100000; ++i) {
      const auto p = obstruction_predictor(i * 1e-5);
      if (p.outer_conditions) {
        CHECK(p.third_excluded);
        worst = std::min(worst, p.third_distance);
      }
    }
    CHECK(worst >= 1.0 / 16 - 2e-5);
  }

  TEST_CASE("phi sign search") {
    CHECK_FALSE(phi_sign_search({0.6}, 500).matches.empty());
    const auto hits = phi_sign_search({0.59354, 0.8990}, 500);
    CHECK(std::find(hits.matches.begin(), hits.matches.end(), 6) != hits.matches.end());
    for (int n : hits.matches) {
      for (double x : {0.59354, 0.8990}) CHECK(phi(n, x) > 0.0);
    }
  }

  TEST_CASE("phi predictor tracks phi within an O(1/n) band") {
    for (int n : {200, 350, 500}) {
      for (double x : {0.3, 0.59354, 0.8990, 1.2}) CHECK(std::fabs(phi(n, x) - phi_predictor(n, x)) <= 6.0 / n);
    }
    const auto hits = phi_sign_search({0.59354, 0.8990}, 500, 200);
    for (int n : hits.matches) {
      for (double x : {0.59354, 0.8990}) CHECK(phi_predictor(n, x) > -6.0 / n);
    }
  }

  TEST_CASE("exact Hermite signs follow the cosine predictor outside the band") {
    for (int n = 1000; n <= 1400; n += 4) {
      for (double a : {0.5, 1.3, 2.2, 4.0}) {
        const double c = std::cos(std::sqrt(8.0 * n + 1) * a);
        if (std::fabs(c) > 10 / std::sqrt(static_cast<double>(n))) {
          CHECK(hermite_weighted(4 * n, a).sign() == (c > 0 ? 1 : -1));
        }
      }
    }
  }

  TEST_CASE("Laguerre sign search") {
    const auto zero = laguerre_sign_search(0.0, {1, 3}, 2000);
    CHECK(zero.expected == Sign::Plus);
    CHECK_FALSE(zero.search.matches.empty());
    const auto two = laguerre_sign_search(2.0, {0.5, 2}, 2000);
    CHECK(two.expected == Sign::Minus);
    CHECK_FALSE(two.search.matches.empty());
    for (int n : two.search.matches) {
      if (n > 200) break;
      for (double t : {0.5, 2.0}) CHECK(laguerre(n, 2.0, t).sign() < 0);
    }
    CHECK_THROWS_AS(laguerre_sign_search(0.5, {1}, 100), DomainError);
  }

  TEST_CASE("pattern frequencies are roughly uniform") {
    const auto all = hermite_sign_search({1.0, std::sqrt(2.0), std::sqrt(3.0)}, SignPattern::parse("+++"), 20000);
    long total = 0;
    for (const auto& [key, count] : all.pattern_counts) total += count;
    REQUIRE(all.pattern_counts.size() == 8);
    const double p = 1.0 / 8;
    const double sigma = std::sqrt(total * p * (1 - p));
    for (const auto& [key, count] : all.pattern_counts) {
      INFO(key);
      // wide band: successive degrees are strongly correlated
      CHECK(std::fabs(count - total * p) < 10 * sigma);
    }
  }
}
