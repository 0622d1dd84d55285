#pragma once

#include <vector>

namespace frl {

struct BoundReport {
  int d = 0;
  double lambda_d = 0.0;
  double bound_new = 0.0;
  double bound_bck = 0.0;
  double bound_upper = 0.0;
  double u_d = 0.0;
};

// -min_t Gamma(d/2+1) J_{d/2}(t) / (t/2)^{d/2}, attained at t = j_{d/2+1}. 2 <= d <= 120.
double lambda_d(int d);
// The same minimum located by a grid scan of the kernel plus golden-section refinement.
double lambda_d_direct(int d);
// Gamma(d/2+1) J_{d/2}(t) / (t/2)^{d/2}
double bessel_kernel(int d, double t);

double bound_new(int d);
double bound_bck(int d);
double bound_upper(int d);
double u_d(int d);

BoundReport bound_report(int d);
std::vector<BoundReport> bound_table(int d_min, int d_max);

struct GrowthRow {
  int d = 0;
  double lower = 0.0;  // d / (2 pi e)
  double bound = 0.0;  // bound_new(d)
  double upper = 0.0;  // (d + 2) / (2 pi)
  bool sandwiched() const { return lower < bound && bound < upper; }
};

std::vector<GrowthRow> linear_growth_report(int d_max);

}  // namespace frl
