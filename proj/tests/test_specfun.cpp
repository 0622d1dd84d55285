#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frl/errors.hpp"
#include "frl/quadrature.hpp"
#include "frl/scaled_value.hpp"
#include "frl/specfun.hpp"

using namespace frl;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b)); }

// mpmath, 40 digits
struct Spot {
  double nu, x, value;
};
constexpr Spot kBesselSpots[] = {
    {0, 1, 0.76519768655796655145},      {0, 12, 0.047689310796833536624},   {0, 50, 0.055812327669251815005},
    {1, 7.5, 0.13524842757970550518},    {2.5, 30, 0.14120285879928212036},  {10, 20, 0.18648255802394508321},
    {10, 15.3, -0.13494534648633387312}, {30, 45, 0.045799309554040956079},  {60, 120, -0.06725905609891957015},
    {60, 200, 0.034156500001271929933},  {45.5, 199.5, 0.05004114154940064718},
};

}  // namespace

TEST_SUITE("specfun") {
  TEST_CASE("gamma classical values") {
    CHECK(frl::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(frl::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(frl::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-13));
    CHECK_THROWS_AS(frl::gamma(0.0), DomainError);
    CHECK_THROWS_AS(frl::gamma(-1.5), DomainError);
    CHECK_THROWS_AS(frl::gamma(200.0), RangeError);
  }

  TEST_CASE("gamma against std::tgamma") {
    for (double x = 0.05; x < 170.0; x *= 1.37) CHECK(rel(frl::gamma(x), std::tgamma(x)) < 1e-12);
  }

  TEST_CASE("gamma_scaled beyond double range") {
    const auto g = gamma_scaled(301.0);  // 300!
    CHECK(rel(g.log2_abs(), std::lgamma(301.0) / std::log(2.0)) < 1e-13);
  }

  TEST_CASE("stirling envelope") {
    for (int i = 1; i <= 100; ++i) {
      const double x = 0.5 * i;
      const double base = 0.5 * std::log(2 * pi) + (x - 0.5) * std::log(x) - x;
      const double lg = std::log(frl::gamma(x));
      CHECK(lg >= base + 1.0 / (12 * x + 1) - 1e-13 * std::fabs(base));
      CHECK(lg <= base + 1.0 / (12 * x) + 1e-13 * std::fabs(base));
    }
  }

  TEST_CASE("hermite_weighted small cases") {
    CHECK(hermite_weighted(0, 2.0).to_double() == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(hermite_weighted(4, 0.0).to_double() == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(hermite_weighted(2, 1.0).to_double() == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-14));
  }

  TEST_CASE("hermite recurrence matches explicit polynomials") {
    // H_0..H_12 monomial coefficients
    const std::vector<std::vector<double>> H = {
        {1},
        {0, 2},
        {-2, 0, 4},
        {0, -12, 0, 8},
        {12, 0, -48, 0, 16},
        {0, 120, 0, -160, 0, 32},
        {-120, 0, 720, 0, -480, 0, 64},
        {0, -1680, 0, 3360, 0, -1344, 0, 128},
        {1680, 0, -13440, 0, 13440, 0, -3584, 0, 256},
        {0, 30240, 0, -80640, 0, 48384, 0, -9216, 0, 512},
        {-30240, 0, 302400, 0, -403200, 0, 161280, 0, -23040, 0, 1024},
        {0, -665280, 0, 2217600, 0, -1774080, 0, 506880, 0, -56320, 0, 2048},
        {665280, 0, -7983360, 0, 13305600, 0, -7096320, 0, 1520640, 0, -135168, 0, 4096},
    };
    for (double x : {-2.7, -0.3, 0.45, 1.0, 3.9}) {
      const auto seq = hermite_weighted_sequence(12, x);
      for (int n = 0; n <= 12; ++n) {
        double p = 0.0;
        for (int k = n; k >= 0; --k) p = p * x + H[n][k];
        const double direct = p * std::exp(-x * x / 2);
        CHECK(std::fabs(seq[n].to_double() - direct) <= 1e-10 * std::max(1.0, std::fabs(direct)));
        CHECK(hermite(n, x) == doctest::Approx(p).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("H_4n(0) equals (4n)!/(2n)!") {
    for (int n = 0; n <= 50; ++n) {
      const auto exact = gamma_scaled(4.0 * n + 1) / gamma_scaled(2.0 * n + 1);
      CHECK(ScaledValue::relative_difference(hermite_weighted(4 * n, 0.0), exact) < 1e-9);
    }
  }

  TEST_CASE("hermite_weighted at high degree against mpmath") {
    // e^{-x^2/2} H_n(x) from mpmath
    const double v50 = 1.5221282619924393954e+39;
    const double v200 = -8.3910272446956216305e+216;
    CHECK(rel(hermite_weighted(50, 1.5).to_double(), v50) < 1e-11);
    CHECK(rel(hermite_weighted(200, 3.0).to_double(), v200) < 1e-11);
    const auto check_log = [](int n, double x, double mant, double exp10) {
      const auto v = hermite_weighted(n, x);
      const double expected = (std::log10(std::fabs(mant)) + exp10) / std::log10(2.0);
      CHECK(v.sign() == (mant > 0 ? 1 : -1));
      CHECK(std::fabs(v.log2_abs() - expected) < 1e-10 * 2.0);
    };
    check_log(1000, 10.0, -2.7445383620384888973, 1433);
    check_log(20000, 0.7, -1.2735149993466460612, 41677);
    check_log(20000, 10.0, 2.6798354536493989457, 41677);
  }

  TEST_CASE("psi values and orthonormality") {
    CHECK(psi(0, 0.0) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
    for (auto [m, n, expected] : {std::tuple{4, 4, 1.0}, std::tuple{0, 4, 0.0}}) {
      const Integrand g{[m, n](double x) { return psi(m, x) * psi(n, x); }, DecayClass::GaussianTail, 1e3};
      CHECK(std::fabs(integrate_line(g, 1e-11) - expected) < 1e-8);
    }
  }

  TEST_CASE("hermite asymptotics") {
    for (int k : {1, 5, 25}) CHECK(hermite_asymptotic(4 * k, 0.0, AsymptoticOrder::Leading) == doctest::Approx(1.0));
    // C fitted on [-3, 3] at n = 100 is 2.98
    double worst = 0.0;
    for (double x = -3.0; x <= 3.0; x += 0.01) {
      worst = std::max(worst, std::fabs(hermite_normalized(100, x) - hermite_asymptotic(100, x, AsymptoticOrder::Corrected)));
    }
    CHECK(worst <= 3.0 / 100);
    CHECK(std::fabs(hermite_normalized(100, 1.0) - hermite_asymptotic(100, 1.0, AsymptoticOrder::Corrected)) <= 3.0 / 100);
    double first = 0.0;
    double top = 0.0;
    for (int n : {100, 400, 1600, 6400}) {
      const double e =
          std::fabs(hermite_normalized(n, 1.0) - hermite_asymptotic(n, 1.0, AsymptoticOrder::Leading)) * std::sqrt(n);
      if (n == 100) first = e;
      top = std::max(top, e);
    }
    CHECK(top <= 0.5);
    CHECK(top <= std::max(first, 0.05) * 3.0);
  }

  TEST_CASE("laguerre basics") {
    CHECK(laguerre(0, 1.7, 7.0).to_double() == doctest::Approx(1.0));
    CHECK(std::fabs(laguerre(1, 0.0, 1.0).to_double()) < 1e-15);
    CHECK(laguerre(2, 1.0, 0.0).to_double() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK_THROWS_AS(laguerre(3, -1.0, 1.0), DomainError);
    CHECK(rel(laguerre(30, 0.0, 5.0).to_double(), 0.34712372241021328541) < 1e-11);
    CHECK(rel(laguerre(500, 0.5, 2.0).to_double(), 0.47238292476741334588) < 1e-10);
    CHECK(rel(laguerre(2000, 2.0, 3.0).to_double(), 185.39807487913730974) < 1e-10);
    CHECK(rel(laguerre(60, -0.5, 40.0).to_double(), 15131706.083840493495) < 1e-10);
  }

  TEST_CASE("laguerre at zero is a binomial coefficient") {
    for (int n = 0; n <= 20; ++n) {
      for (double nu : {0.0, 0.5, 3.0}) {
        const double binom = std::exp(std::lgamma(n + nu + 1) - std::lgamma(n + 1.0) - std::lgamma(nu + 1));
        CHECK(rel(laguerre(n, nu, 0.0).to_double(), binom) < 1e-12);
      }
    }
  }

  TEST_CASE("laguerre generating function") {
    for (double nu : {0.0, 0.5}) {
      for (double x : {0.5, 2.0, 5.0}) {
        const auto seq = laguerre_sequence(60, nu, x);
        double sum = 0.0;
        for (int n = 60; n >= 0; --n) sum = sum * 0.5 + seq[n].to_double();
        CHECK(std::fabs(sum - std::pow(0.5, -nu - 1) * std::exp(-x)) < 1e-8);
      }
    }
  }

  TEST_CASE("bessel basics") {
    CHECK(bessel_j(BesselOrder(0), 0.0) == 1.0);
    CHECK(bessel_j(BesselOrder(0.5), pi / 2) == doctest::Approx(2 / pi).epsilon(1e-13));
    CHECK_THROWS_AS(BesselOrder(-0.75), DomainError);
    for (const auto& s : kBesselSpots) CHECK(std::fabs(bessel_j(BesselOrder(s.nu), s.x) - s.value) < 1e-12);
    CHECK(std::fabs(bessel_j(BesselOrder(0.25), 3.0) - -0.1006370643367312748) < 1e-12);
  }

  TEST_CASE("bessel against std::cyl_bessel_j") {
    double worst = 0.0;
    for (double nu = 0.0; nu <= 10.0; nu += 0.5) {
      for (double x = 0.0; x <= 100.0; x += 0.37) {
        worst = std::max(worst, std::fabs(bessel_j(BesselOrder(nu), x) - std::cyl_bessel_j(nu, x)));
      }
    }
    CHECK(worst < 1e-11);
  }

  TEST_CASE("bessel magnitude at most one") {
    for (double nu = 0.0; nu <= 10.0; nu += 0.5) {
      for (int i = 0; i < 10000; i += 7) {
        CHECK(std::fabs(bessel_j(BesselOrder(nu), i * 0.01)) <= 1 + 1e-12);
      }
    }
  }

  TEST_CASE("bessel integral identity") {
    for (double nu : {1.0, 2.0, 3.5}) {
      for (double rho : {1.0, 3.0, 5.0, 20.0}) {
        const Integrand g{[nu](double r) { return bessel_j(BesselOrder(nu - 1), r) * std::pow(r, nu); },
                          DecayClass::Compact, 1.0};
        QuadratureOptions o;
        o.tol = 1e-9;
        o.max_panel_width = 0.5;
        const double lhs = integrate_adaptive(g, 0.0, rho, o).value;
        CHECK(std::fabs(lhs - bessel_j(BesselOrder(nu), rho) * std::pow(rho, nu)) < 1e-8);
      }
    }
    const Integrand g{[](double r) { return bessel_j(BesselOrder(1), r) * r * r; }, DecayClass::Compact, 1.0};
    CHECK(integrate(g, 0.0, 3.0, 1e-12) == doctest::Approx(4.37482134527302).epsilon(1e-12));
  }

  TEST_CASE("bessel zeros and stationary points") {
    CHECK(bessel_first_zero(BesselOrder(0.5)) == doctest::Approx(pi).epsilon(1e-12));
    CHECK(bessel_first_zero(BesselOrder(1.5)) == doctest::Approx(4.49340945790906).epsilon(1e-12));
    CHECK(bessel_first_zero(BesselOrder(2)) == doctest::Approx(5.13562230184068).epsilon(1e-12));
    CHECK(bessel_stationary_points(BesselOrder(1), 1).at(0) == doctest::Approx(1.84118378134066).epsilon(1e-12));
    for (double nu : {1.0, 2.0, 5.0}) {
      const auto theta = bessel_stationary_points(BesselOrder(nu), 10);
      REQUIRE(theta.size() == 10);
      for (std::size_t k = 1; k < theta.size(); ++k) {
        CHECK(theta[k] > theta[k - 1]);
        CHECK(std::fabs(bessel_j(BesselOrder(nu), theta[k])) < std::fabs(bessel_j(BesselOrder(nu), theta[k - 1])));
      }
    }
    for (int nu = 1; nu <= 10; ++nu) CHECK(bessel_stationary_points(BesselOrder(nu), 1)[0] >= nu);
    for (int i = 0; i <= 120; ++i) CHECK(bessel_first_zero(BesselOrder(0.5 * i)) > 0.5 * i);
  }

  TEST_CASE("fejer formula rate") {
    for (double nu : {0.0, 1.0}) {
      for (double x : {1.0, 3.0}) {
        for (int n : {100, 400, 1600, 6400}) {
          const double e = std::fabs(laguerre_fejer_scaled(n, nu, x) - laguerre_fejer_leading(n, nu, x));
          CHECK(e * std::pow(n, 0.75 - 0.5 * nu) <= 1.5);
        }
      }
    }
  }
}

TEST_SUITE("scaled_value") {
  TEST_CASE("round trip and arithmetic") {
    for (double v : {0.0, 1.0, -3.5, 1e-300, 7.25e300}) CHECK(ScaledValue(v).to_double() == v);
    const auto big = ScaledValue::exp2(5000.0);
    CHECK((big * big / big).log2_abs() == doctest::Approx(5000.0));
    CHECK((big - big).is_zero());
    CHECK(std::isinf(big.to_double()));
    CHECK(ScaledValue::exp2(-5000.0).to_double() == 0.0);
    CHECK(ScaledValue(2.0) < ScaledValue(3.0));
    CHECK(-big < ScaledValue(0.0));
    CHECK(ScaledValue(9.0).sqrt().to_double() == doctest::Approx(3.0));
    CHECK(ScaledValue(2.0).pow(10.0).to_double() == doctest::Approx(1024.0));
    CHECK(ScaledValue::exp(-1e6).log2_abs() == doctest::Approx(-1e6 / std::log(2.0)));
    CHECK_THROWS_AS(ScaledValue(std::nan("")), DomainError);
  }

  TEST_CASE("factorial") {
    CHECK(factorial_scaled(10).to_double() == 3628800.0);
    CHECK(factorial_scaled(1000).log2_abs() == doctest::Approx(std::lgamma(1001.0) / std::log(2.0)).epsilon(1e-13));
  }
}
