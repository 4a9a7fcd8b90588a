#pragma once

#include <span>
#include <vector>

#include "tansec/exact.hpp"
#include "tansec/triangles.hpp"

namespace tansec {

// Identifies the algorithm behind a triangle value; the CLI value/crosscheck
// commands and the benchmark key their work on this tag. Every operation
// below is labeled by exactly one tag.
enum class MethodTag {
  Recurrence,             // triangle recurrence (the canonical route)
  PowerSeriesRecurrence,  // tangent_via_power_recurrence
  CauchyProduct,          // secant_via_cauchy
  BellRecurrenceA,        // tangent_via_bell_recurrence, variant A
  BellRecurrenceB,        // tangent_via_bell_recurrence, variant B
  ArctanBasis,            // tangent_via_arctangent
  SchwattDoubleSum,       // tangent_via_double_sum
  Stirling,               // tangent_via_stirling
  Lah,                    // tangent_via_lah
  CentralFactorial,       // tangent_via_central_factorial
  Oracle,                 // definitional series extraction
};

enum class BellVariant { A, B };

// Coefficients c_0..c_{k-1} expressing the order-k tangent numbers as a
// linear combination of the classical ones: T(n,k) = sum_r c_r T_{n+r},
// with c_r = A(k,r+1) / (k! (k-1)!) over the arctangent triangle A.
struct TBasisCoefficients {
  int k = 0;
  std::vector<ExactRational> coeffs;
};

// Expansion of tan^n as a combination of derivatives of tan:
// tan^n t = sum_r coeffs[r] D^r tan t + constant, where coeffs[r] =
// A(n,r+1)/(n-1)! and the constant is 0 for odd n and (-1)^(n/2) for even n.
struct TanPowerExpansion {
  std::vector<ExactRational> coeffs;
  ExactRational constant;
};

// Throughout, `tangent` holds the classical tangent numbers with
// tangent[i] = T_{i+1} (as returned by tangent_numbers), and `secant`
// holds secant[i] = S_i. Every routine returning a higher-order tangent
// value accepts any n, k >= 0 and returns 1 at (0,0) and 0 whenever
// k == 0 < n, k > n, or n and k differ in parity; the defining sum is only
// evaluated on the surviving cells. Internal rationals are reduced with
// to_integer, so a non-integral result raises inconsistency_error.

// Power-of-series recurrence. Needs T_1..T_{n-k+1}.
ExactInt tangent_via_power_recurrence(int n, int k,
                                      std::span<const ExactInt> tangent);

// Cauchy product of the secant and tangent-power series:
// S(n,k) = sum_m C(n,m) T(m,k) S_{n-m}. Needs the tangent triangle up to n
// and S_0..S_n.
ExactInt secant_via_cauchy(int n, int k, const Triangle& tangent_tri,
                           std::span<const ExactInt> secant);

// Bell-polynomial recurrences; variant A is integer throughout, variant B
// carries a 1/(k+1) prefactor. Fills a fresh working table per call (no
// cache is shared across calls or methods). Needs T_1..T_n.
ExactInt tangent_via_bell_recurrence(int n, int k, BellVariant variant,
                                     std::span<const ExactInt> tangent);

// Needs the arctangent triangle up to row k.
TBasisCoefficients tangent_coeffs_on_T(int k, const Triangle& arctan_tri);

// Evaluates the arctangent-basis combination sum_r T_{n+r} A(k,r+1) over
// k!(k-1)!. Needs T_1..T_{n+k-1} and the arctangent triangle up to row k.
ExactInt tangent_via_arctangent(int n, int k,
                                std::span<const ExactInt> tangent,
                                const Triangle& arctan_tri);

// Schwatt's explicit double sum (self-contained).
ExactInt tangent_via_double_sum(int n, int k);

// Stirling-number route and its Lah-number rewrite (self-contained; both
// must agree on all inputs).
ExactInt tangent_via_stirling(int n, int k);
ExactInt tangent_via_lah(int n, int k);

// Central-factorial route; dispatches on parity to the even-even or
// odd-odd formula, the latter through the half-integer binomial.
ExactInt tangent_via_central_factorial(int n, int k);

// Row-sum identities. (a): sum_{k=1..n+1} (k-1)! T(n+1,k) equals
// (2^n - 1) T_n for odd n and 2^n S_n for even n. (b): sum_{k=0..n}
// k! T(n,k) = 2^(n-1) (T_n or S_n). The tangent triangle must be generated
// to n+1 for (a) and to n for (b).
bool check_row_identity_a(int n, const Triangle& tangent_tri,
                          std::span<const ExactInt> tangent,
                          std::span<const ExactInt> secant);
bool check_row_identity_b(int n, const Triangle& tangent_tri,
                          std::span<const ExactInt> tangent,
                          std::span<const ExactInt> secant);

// Needs the arctangent triangle up to row n (n >= 1).
TanPowerExpansion tan_power_expansion(int n, const Triangle& arctan_tri);

// True for the eight per-cell tangent routes above (everything except
// Recurrence, CauchyProduct and Oracle).
bool is_tangent_route(MethodTag m);

// Dispatches (n, k) to the tangent route named by m; std::logic_error for
// tags that are not tangent routes. Prerequisites are the union of the
// routes': tangent up to T_{n+k-1} and the arctangent triangle up to row k.
ExactInt tangent_route_value(MethodTag m, int n, int k,
                             std::span<const ExactInt> tangent,
                             const Triangle& arctan_tri);

}  // namespace tansec
