#pragma once

#include <string>
#include <vector>

#include "frl/quadrature.hpp"
#include "frl/scaled_value.hpp"

namespace frl {

enum class CoefficientBasis { UnnormalizedH4n, Psi };

// f(x) = sum_n alpha_n H_{4n}(sqrt(2 pi) x) e^{-pi x^2}. Immutable after construction.
class EigenPlusFunction {
 public:
  // With normalized = true the constructor checks f(0) = 0 to 1e-12 relative to sum |alpha_n H_{4n}(0)|.
  explicit EigenPlusFunction(std::vector<double> coeffs, bool normalized = false);

  // Coefficients c_n over the orthonormal psi_{4n}.
  static EigenPlusFunction from_psi(const std::vector<double>& psi_coeffs, bool normalized = false);

  const std::vector<double>& coeffs() const { return coeffs_; }
  std::vector<double> psi_coeffs() const;
  bool normalized() const { return normalized_; }
  int max_index() const { return static_cast<int>(coeffs_.size()) - 1; }

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;
  ScaledValue eval_scaled(double x) const;

  // sum_n alpha_n H_{4n}(0)
  double value_at_zero() const;

  // A copy with alpha_pivot re-solved so that f(0) = 0, flagged normalized.
  EigenPlusFunction normalized_by(int pivot) const;

  // Coefficients p_k of P(y) = sum_n alpha_n H_{4n}(y), so f(x) = P(sqrt(2 pi) x) e^{-pi x^2}.
  std::vector<double> monomial_coeffs() const;

  // C with |f(x)| <= C e^{-pi x^2 / 2}.
  double envelope() const;

  Integrand integrand() const;

 private:
  std::vector<double> coeffs_;
  bool normalized_ = false;
};

// -1.13, 1/25, 1/3240 and the alpha_3 that makes f(0) = 0.
EigenPlusFunction paper_candidate();

// H_{4n}(0) = (4n)! / (2n)!
ScaledValue hermite_4n_at_zero(int n);

enum class TailReason { LeadingTermDomination };

struct LocalMinimum {
  double location = 0.0;
  double value = 0.0;
};

struct RootCertificate {
  std::vector<double> roots;  // positive roots, increasing; double roots included
  double largest_root = 0.0;  // A(f): f >= 0 for x > largest_root
  double scan_bound = 0.0;
  TailReason tail_reason = TailReason::LeadingTermDomination;
  std::vector<LocalMinimum> double_roots;
  std::vector<LocalMinimum> near_double_roots;
};

struct RootScanOptions {
  double grid_step = 1e-3;
  double tol = 1e-12;
  double double_root_threshold = 1e-10;
  double near_double_relative = 1e-2;
};

// Radius beyond which f > 0, from P's monomial coefficients. Throws NegativeAtInfinityError
// if the top coefficient is negative, DomainError if all coefficients vanish.
double tail_bound(const EigenPlusFunction& f);

RootCertificate root_certificate(const EigenPlusFunction& f, const RootScanOptions& options = {});

// phi_n(x) = e_{n+1}(x) / e_{n+1}(0) - e_n(x) / e_n(0)
double phi(int n, double x);
// phi_0(x) .. phi_{n_max}(x) from one recurrence pass.
std::vector<double> phi_sequence(int n_max, double x);

struct SignSplit {
  double positive = 0.0;
  double negative = 0.0;  // integral of f where f < 0 (a nonpositive number)
};

SignSplit sign_split_integrals(const EigenPlusFunction& f, double tol);
double l1_norm(const EigenPlusFunction& f, double tol);
double integral(const EigenPlusFunction& f, double tol);

// JSON coefficient files: {"coeffs": [...], "basis": "unnormalized-H4n" | "psi", "normalized": bool}
EigenPlusFunction parse_coefficient_json(const std::string& text);
EigenPlusFunction load_coefficient_file(const std::string& path);
std::string coefficient_json(const EigenPlusFunction& f);

}  // namespace frl
