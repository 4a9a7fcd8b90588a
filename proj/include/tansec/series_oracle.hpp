#pragma once

#include <vector>

#include "tansec/exact.hpp"

namespace tansec {

// Maclaurin series truncated at a fixed order; coeff(i) multiplies t^i.
// Operations never read past an operand's order, and binary operations
// truncate to the smaller of the two orders.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(std::vector<ExactRational> coeffs);

  // Constant series c0 + 0 t + ... + 0 t^order.
  static TruncatedSeries constant(const ExactRational& c0, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ExactRational& coeff(int i) const;
  const std::vector<ExactRational>& coeffs() const { return coeffs_; }

 private:
  std::vector<ExactRational> coeffs_;
};

TruncatedSeries series_sin(int order);
TruncatedSeries series_cos(int order);
TruncatedSeries series_sinh(int order);
TruncatedSeries series_cosh(int order);
TruncatedSeries series_arctan(int order);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const ExactRational& c, const TruncatedSeries& a);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Long division a/b; b must have a nonzero constant term (std::domain_error
// otherwise).
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long k);

// Termwise derivative; the order drops by one (a constant input stays a
// zero series of order 0).
TruncatedSeries series_derivative(const TruncatedSeries& a);

// Division by t for a series with zero constant term (std::domain_error
// otherwise); the order drops by one.
TruncatedSeries series_shift_down(const TruncatedSeries& a);

// Definitional coefficient extraction: n! [t^n] tan^k t / k!, and likewise
// for sec t tan^k t and arctan^k t. Ground truth for the triangles; the
// base series are built by exact division (sin/cos, 1/cos), never seeded
// from the triangle values they validate. Throws inconsistency_error if
// the scaled coefficient fails to be an integer.
ExactInt definitional_T(int n, int k);
ExactInt definitional_S(int n, int k);
ExactInt definitional_Tstar(int n, int k);

}  // namespace tansec
