#include "tansec/derivative_engine.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tansec/number_kernel.hpp"
#include "tansec/series_oracle.hpp"
#include "tansec/triangles.hpp"

namespace tansec {

namespace {

ExactInt fact(int n) { return factorial(static_cast<unsigned long>(n)); }

bool is_hyperbolic(FunctionTag f) {
  return f == FunctionTag::Tanh || f == FunctionTag::Sech ||
         f == FunctionTag::Coth || f == FunctionTag::Csch;
}

bool is_reciprocal_family(FunctionTag f) {
  return f == FunctionTag::Cot || f == FunctionTag::Csc ||
         f == FunctionTag::Coth || f == FunctionTag::Csch;
}

const char* local_name(FunctionTag f) {
  switch (f) {
    case FunctionTag::Tan: return "tan";
    case FunctionTag::Sec: return "sec";
    case FunctionTag::Cot: return "cot";
    case FunctionTag::Csc: return "csc";
    case FunctionTag::Tanh: return "tanh";
    case FunctionTag::Sech: return "sech";
    case FunctionTag::Coth: return "coth";
    case FunctionTag::Csch: return "csch";
  }
  return "?";
}

const char* pole_location(FunctionTag f) {
  switch (f) {
    case FunctionTag::Tan:
    case FunctionTag::Sec: return "x = pi/2 + m*pi";
    case FunctionTag::Cot:
    case FunctionTag::Csc: return "x = m*pi";
    case FunctionTag::Coth:
    case FunctionTag::Csch: return "x = 0";
    default: return "";
  }
}

[[noreturn]] void throw_pole(FunctionTag f, double x) {
  std::ostringstream os;
  os << "derivative of " << local_name(f) << " undefined at x = " << x
     << " (pole at " << pole_location(f) << ")";
  throw std::domain_error(os.str());
}

// Partial-sum evaluation of a truncated series at x: converged when the
// trailing increments stay below tail_tol relative to the sum (eight in a
// row, so parity-vanishing coefficients cannot fake a small tail).
struct TailSum {
  double value = 0.0;
  bool converged = false;
};

TailSum eval_series_tail(const TruncatedSeries& s, double x, double tail_tol) {
  double sum = 0.0;
  double power = 1.0;
  int small_run = 0;
  for (int m = 0; m <= s.order(); ++m) {
    const double term = s.coeff(m).get_d() * power;
    sum += term;
    power *= x;
    const double scale = std::max(std::abs(sum), 1e-12);
    if (std::abs(term) <= tail_tol * scale)
      ++small_run;
    else
      small_run = 0;
  }
  return {sum, small_run >= 8};
}

// The analytic factor h in f(x) = h(x)/x for the reciprocal family; h is
// regular on |x| < pi, which covers every x this oracle can certify.
TruncatedSeries analytic_factor(FunctionTag f, int order) {
  const TruncatedSeries one = TruncatedSeries::constant(ExactRational(1), order);
  switch (f) {
    case FunctionTag::Cot:
      return series_div(series_cos(order),
                        series_shift_down(series_sin(order + 1)));
    case FunctionTag::Csc:
      return series_div(one, series_shift_down(series_sin(order + 1)));
    case FunctionTag::Coth:
      return series_div(series_cosh(order),
                        series_shift_down(series_sinh(order + 1)));
    case FunctionTag::Csch:
      return series_div(one, series_shift_down(series_sinh(order + 1)));
    default:
      throw std::logic_error("analytic_factor: not a reciprocal function");
  }
}

TruncatedSeries direct_series(FunctionTag f, int order) {
  const TruncatedSeries one = TruncatedSeries::constant(ExactRational(1), order);
  switch (f) {
    case FunctionTag::Tan:
      return series_div(series_sin(order), series_cos(order));
    case FunctionTag::Sec:
      return series_div(one, series_cos(order));
    case FunctionTag::Tanh:
      return series_div(series_sinh(order), series_cosh(order));
    case FunctionTag::Sech:
      return series_div(one, series_cosh(order));
    default:
      throw std::logic_error("direct_series: function needs the 1/x split");
  }
}

TailSum oracle_attempt(FunctionTag f, int n, double x, int order,
                       double tail_tol) {
  if (!is_reciprocal_family(f)) {
    TruncatedSeries s = direct_series(f, order);
    for (int i = 0; i < n; ++i) s = series_derivative(s);
    return eval_series_tail(s, x, tail_tol);
  }

  // f = h(x) / x: by the product rule
  //   D^n f = sum_j C(n,j) (-1)^j j! x^{-(j+1)} h^{(n-j)}(x).
  TruncatedSeries cur = analytic_factor(f, order);
  std::vector<double> h_derivative(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const TailSum t = eval_series_tail(cur, x, tail_tol);
    if (!t.converged) return {0.0, false};
    h_derivative[static_cast<size_t>(i)] = t.value;
    if (i < n) cur = series_derivative(cur);
  }

  double sum = 0.0;
  double inv_power = 1.0 / x;  // x^{-(j+1)}
  for (int j = 0; j <= n; ++j) {
    const double weight =
        ExactInt(binomial_int(static_cast<unsigned long>(n),
                              static_cast<unsigned long>(j)) *
                 fact(j))
            .get_d();
    const double term =
        weight * inv_power * h_derivative[static_cast<size_t>(n - j)];
    sum += j % 2 == 0 ? term : -term;
    inv_power /= x;
  }
  return {sum, true};
}

double relative_error(double a, double b) {
  const double mag = std::max(std::abs(a), std::abs(b));
  if (mag == 0.0) return 0.0;
  return std::abs(a - b) / mag;
}

}  // namespace

DerivativePolynomial derivative_poly(FunctionTag func, int n) {
  if (n < 0)
    throw std::invalid_argument("derivative_poly: order must be nonnegative");

  DerivativePolynomial poly;
  poly.func = func;
  poly.n = n;
  poly.constant = 0;

  const bool hyper = is_hyperbolic(func);
  // cot and csc pick up (-1)^n relative to tan and sec.
  const int flip =
      (func == FunctionTag::Cot || func == FunctionTag::Csc) ? parity_sign(n)
                                                             : 1;

  switch (func) {
    case FunctionTag::Tan:
    case FunctionTag::Cot:
    case FunctionTag::Tanh:
    case FunctionTag::Coth: {
      poly.prefactor = Prefactor::None;
      poly.base = func == FunctionTag::Tan    ? BaseVariable::TanX
                  : func == FunctionTag::Cot  ? BaseVariable::CotX
                  : func == FunctionTag::Tanh ? BaseVariable::TanhX
                                              : BaseVariable::CothX;
      const Triangle tri(TriangleKind::TangentHigher, n + 1);
      const ExactInt& c0 = tri.cell(n, 1);
      if (c0 != 0) {
        // Nonzero only for odd n, where the hyperbolic sign exponent
        // (n-1)/2 is integral.
        const int sign = flip * (hyper ? parity_sign((n - 1) / 2) : 1);
        poly.constant = sign * c0;
      }
      for (int k = 1; k <= n + 1; ++k) {
        const ExactInt& t = tri.cell(n + 1, k);
        if (t == 0) continue;
        const int sign = flip * (hyper ? parity_sign((n + k - 1) / 2) : 1);
        poly.terms[k] = sign * fact(k - 1) * t;
      }
      break;
    }
    case FunctionTag::Sec:
    case FunctionTag::Csc:
    case FunctionTag::Sech:
    case FunctionTag::Csch: {
      poly.prefactor = func == FunctionTag::Sec    ? Prefactor::SecX
                       : func == FunctionTag::Csc  ? Prefactor::CscX
                       : func == FunctionTag::Sech ? Prefactor::SechX
                                                   : Prefactor::CschX;
      poly.base = func == FunctionTag::Sec   ? BaseVariable::TanX
                  : func == FunctionTag::Csc ? BaseVariable::CotX
                  : func == FunctionTag::Sech ? BaseVariable::TanhX
                                              : BaseVariable::CothX;
      const Triangle tri(TriangleKind::SecantHigher, n);
      for (int k = 0; k <= n; ++k) {
        const ExactInt& s = tri.cell(n, k);
        if (s == 0) continue;
        const int sign = flip * (hyper ? parity_sign((n + k) / 2) : 1);
        poly.terms[k] = sign * fact(k) * s;
      }
      break;
    }
  }
  return poly;
}

double eval_derivative(const DerivativePolynomial& poly, double x) {
  const double sx = std::sin(x), cx = std::cos(x);
  const double thx = std::tanh(x), chx = std::cosh(x), shx = std::sinh(x);

  double base = 0.0;
  switch (poly.base) {
    case BaseVariable::TanX: base = sx / cx; break;
    case BaseVariable::CotX: base = cx / sx; break;
    case BaseVariable::TanhX: base = thx; break;
    // 1/tanh stays finite for large |x| where cosh/sinh both overflow.
    case BaseVariable::CothX: base = 1.0 / thx; break;
  }

  double prefactor = 1.0;
  switch (poly.prefactor) {
    case Prefactor::None: break;
    case Prefactor::SecX: prefactor = 1.0 / cx; break;
    case Prefactor::CscX: prefactor = 1.0 / sx; break;
    case Prefactor::SechX: prefactor = 1.0 / chx; break;
    case Prefactor::CschX: prefactor = 1.0 / shx; break;
  }

  constexpr double kPoleGuard = 1e15;
  if (!std::isfinite(base) || std::abs(base) > kPoleGuard ||
      !std::isfinite(prefactor) || std::abs(prefactor) > kPoleGuard)
    throw_pole(poly.func, x);

  const int top = poly.terms.empty() ? 0 : poly.terms.rbegin()->first;
  double acc = 0.0;
  for (int k = top; k >= 0; --k) {
    const auto it = poly.terms.find(k);
    acc = acc * base + (it == poly.terms.end() ? 0.0 : it->second.get_d());
  }
  return prefactor * acc + poly.constant.get_d();
}

double eval_derivative(FunctionTag func, int n, double x) {
  return eval_derivative(derivative_poly(func, n), x);
}

ValidationReport validate_derivative(FunctionTag func, int n, double x,
                                     double tol) {
  ValidationReport report;
  report.func = func;
  report.n = n;
  report.x = x;
  report.tol = tol;
  report.closed_form = eval_derivative(func, n, x);

  // Demand the tail two orders of magnitude below tol so truncation noise
  // cannot tip a genuine pass/fail.
  const double tail_tol = tol * 1e-2;
  for (const int extra : {40, 80, 160, 320}) {
    const TailSum attempt = oracle_attempt(func, n, x, n + extra, tail_tol);
    report.oracle = attempt.value;
    if (!attempt.converged) continue;
    report.rel_error = relative_error(report.closed_form, attempt.value);
    report.status = report.rel_error <= tol ? ValidationStatus::Pass
                                            : ValidationStatus::Fail;
    return report;
  }
  return report;  // status stays Inconclusive
}

}  // namespace tansec
