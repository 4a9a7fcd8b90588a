#pragma once

#include <map>

#include "tansec/exact.hpp"

namespace tansec {

enum class FunctionTag { Tan, Sec, Cot, Csc, Tanh, Sech, Coth, Csch };

enum class Prefactor { None, SecX, CscX, SechX, CschX };
enum class BaseVariable { TanX, CotX, TanhX, CothX };

// Closed form of the n-th derivative: an optional prefactor times a
// polynomial in the base variable, plus an additive constant:
//
//   D^n f = prefactor(x) * sum_k terms[k] * base(x)^k + constant.
//
// Only parity-surviving powers appear; every stored coefficient is nonzero.
// The prefactor is None exactly when f is tan/cot/tanh/coth (whose
// derivatives are plain polynomials with a possible constant term), and
// the constant is zero whenever a prefactor is present (the k = 0 term of
// the sum plays that role instead).
struct DerivativePolynomial {
  FunctionTag func = FunctionTag::Tan;
  int n = 0;
  Prefactor prefactor = Prefactor::None;
  BaseVariable base = BaseVariable::TanX;
  ExactInt constant;
  std::map<int, ExactInt> terms;
};

// Exact symbolic n-th derivative of the tagged function, n >= 0. For n = 0
// the formulas reproduce the function itself (e.g. Tan gives the single
// term tan^1 with coefficient 1).
DerivativePolynomial derivative_poly(FunctionTag func, int n);

// Double-precision evaluation at x: Horner on the dense power list, the
// prefactor applied last. Throws std::domain_error when x sits at (or close
// enough to overflow near) a pole of the base function, naming the pole.
double eval_derivative(const DerivativePolynomial& poly, double x);
double eval_derivative(FunctionTag func, int n, double x);

enum class ValidationStatus { Pass, Fail, Inconclusive };

struct ValidationReport {
  FunctionTag func = FunctionTag::Tan;
  int n = 0;
  double x = 0.0;
  double tol = 0.0;
  double closed_form = 0.0;
  double oracle = 0.0;  // meaningless when status == Inconclusive
  double rel_error = 0.0;
  ValidationStatus status = ValidationStatus::Inconclusive;
};

// Checks the closed form against a termwise-differentiated Maclaurin
// oracle built from exact rational series (for cot/csc/coth/csch the 1/x
// pole is split off and differentiated in closed form, the analytic factor
// by series). The truncation order starts at n + 40 and grows until the
// series tail is negligible at tol; if that never happens the status is
// Inconclusive rather than Fail.
ValidationReport validate_derivative(FunctionTag func, int n, double x,
                                     double tol);

}  // namespace tansec
