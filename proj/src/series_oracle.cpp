#include "tansec/series_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "tansec/number_kernel.hpp"

namespace tansec {

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

TruncatedSeries TruncatedSeries::constant(const ExactRational& c0, int order) {
  std::vector<ExactRational> c(static_cast<size_t>(order) + 1);
  c[0] = c0;
  return TruncatedSeries(std::move(c));
}

const ExactRational& TruncatedSeries::coeff(int i) const {
  if (i < 0 || i > order())
    throw std::out_of_range("TruncatedSeries::coeff: index beyond order");
  return coeffs_[static_cast<size_t>(i)];
}

namespace {

enum class Parity { Even, Odd };

// Builds sum over m of sign^((m - start)/2) * t^m / denom(m) for m of the
// given parity, covering sin/cos/sinh/cosh/arctan in one place.
TruncatedSeries alternating(int order, Parity parity, bool signs_alternate,
                            bool denom_is_factorial) {
  std::vector<ExactRational> c(static_cast<size_t>(order) + 1);
  int sign = 1;
  for (int m = parity == Parity::Even ? 0 : 1; m <= order; m += 2) {
    ExactInt den = denom_is_factorial
                       ? factorial(static_cast<unsigned long>(m))
                       : ExactInt(std::max(m, 1));
    c[static_cast<size_t>(m)] = make_rational(ExactInt(sign), std::move(den));
    if (signs_alternate) sign = -sign;
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace

TruncatedSeries series_sin(int order) {
  return alternating(order, Parity::Odd, true, true);
}

TruncatedSeries series_cos(int order) {
  return alternating(order, Parity::Even, true, true);
}

TruncatedSeries series_sinh(int order) {
  return alternating(order, Parity::Odd, false, true);
}

TruncatedSeries series_cosh(int order) {
  return alternating(order, Parity::Even, false, true);
}

TruncatedSeries series_arctan(int order) {
  return alternating(order, Parity::Odd, true, false);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<ExactRational> c(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) c[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_scale(const ExactRational& s, const TruncatedSeries& a) {
  std::vector<ExactRational> c(a.coeffs());
  for (auto& x : c) x *= s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<ExactRational> c(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    ExactRational sum(0);
    for (int j = 0; j <= i; ++j) sum += a.coeff(j) * b.coeff(i - j);
    c[static_cast<size_t>(i)] = std::move(sum);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.coeff(0) == 0)
    throw std::domain_error("series_div: divisor has zero constant term");
  const int order = std::min(a.order(), b.order());
  std::vector<ExactRational> c(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    ExactRational acc = a.coeff(i);
    for (int j = 1; j <= i; ++j) acc -= b.coeff(j) * c[static_cast<size_t>(i - j)];
    c[static_cast<size_t>(i)] = acc / b.coeff(0);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long k) {
  TruncatedSeries result = TruncatedSeries::constant(ExactRational(1), a.order());
  TruncatedSeries square = a;
  // Repeated squaring; truncation orders all match a.order().
  while (k > 0) {
    if (k & 1UL) result = series_mul(result, square);
    k >>= 1UL;
    if (k > 0) square = series_mul(square, square);
  }
  return result;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries::constant(ExactRational(0), 0);
  std::vector<ExactRational> c(static_cast<size_t>(a.order()));
  for (int i = 1; i <= a.order(); ++i)
    c[static_cast<size_t>(i - 1)] = ExactRational(i) * a.coeff(i);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_shift_down(const TruncatedSeries& a) {
  if (a.coeff(0) != 0)
    throw std::domain_error("series_shift_down: nonzero constant term");
  if (a.order() == 0) return TruncatedSeries::constant(ExactRational(0), 0);
  std::vector<ExactRational> c(a.coeffs().begin() + 1, a.coeffs().end());
  return TruncatedSeries(std::move(c));
}

namespace {

// n! [t^n] s / k!, asserted integral.
ExactInt scaled_coefficient(const TruncatedSeries& s, int n, int k,
                            const char* what) {
  ExactRational value = s.coeff(n);
  value *= make_rational(factorial(static_cast<unsigned long>(n)),
                         factorial(static_cast<unsigned long>(k)));
  return to_integer(value, what);
}

}  // namespace

ExactInt definitional_T(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (k == 0) return n == 0 ? 1 : 0;  // tan^0 = 1
  const TruncatedSeries tan = series_div(series_sin(n), series_cos(n));
  return scaled_coefficient(series_pow(tan, static_cast<unsigned long>(k)), n,
                            k, "definitional_T");
}

ExactInt definitional_S(int n, int k) {
  if (n < 0 || k < 0) return 0;
  const TruncatedSeries cos = series_cos(n);
  const TruncatedSeries sec =
      series_div(TruncatedSeries::constant(ExactRational(1), n), cos);
  TruncatedSeries s = sec;
  if (k > 0) {
    const TruncatedSeries tan = series_div(series_sin(n), cos);
    s = series_mul(sec, series_pow(tan, static_cast<unsigned long>(k)));
  }
  return scaled_coefficient(s, n, k, "definitional_S");
}

ExactInt definitional_Tstar(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  return scaled_coefficient(
      series_pow(series_arctan(n), static_cast<unsigned long>(k)), n, k,
      "definitional_Tstar");
}

}  // namespace tansec
