#include "tansec/formulas.hpp"

#include <stdexcept>
#include <utility>

#include "tansec/number_kernel.hpp"

namespace tansec {

namespace {

bool parity_mismatch(int n, int k) { return (n - k) % 2 != 0; }

// (-1)^((n-k)/2) (-1)^n; only evaluated on the parity-matched branch,
// where the first exponent is integral.
int outer_sign(int n, int k) { return parity_sign((n - k) / 2) * parity_sign(n); }

ExactInt choose(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return binomial_int(static_cast<unsigned long>(n),
                      static_cast<unsigned long>(k));
}

ExactInt fact(int n) { return factorial(static_cast<unsigned long>(n)); }

ExactInt two_pow(int e) { return int_pow(ExactInt(2), static_cast<unsigned long>(e)); }

// tangent[i] = T_{i+1}.
const ExactInt& tangent_at(std::span<const ExactInt> tangent, int n) {
  return tangent[static_cast<size_t>(n) - 1];
}

// Boundary shared by all tangent routes: T(0,0) = 1, and a cell is zero
// whenever k = 0 < n, k > n, or the parities differ (tan^k is odd/even with
// k, so off-parity coefficients vanish and their prefactors are never
// touched).
bool trivial_tangent_cell(int n, int k, ExactInt& out) {
  if (n == 0 && k == 0) {
    out = 1;
    return true;
  }
  if (n < 0 || k <= 0 || k > n || parity_mismatch(n, k)) {
    out = 0;
    return true;
  }
  return false;
}

}  // namespace

ExactInt tangent_via_power_recurrence(int n, int k,
                                      std::span<const ExactInt> tangent) {
  ExactInt trivial;
  if (trivial_tangent_cell(n, k, trivial)) return trivial;
  if (n == k) return 1;  // T_1^k

  // Scratch column value[m] = T(m,k), m = k..n; built per call, no shared
  // cache across methods.
  std::vector<ExactRational> value(static_cast<size_t>(n) + 1);
  value[static_cast<size_t>(k)] = 1;
  for (int m = k + 1; m <= n; ++m) {
    ExactRational sum(0);
    for (int r = 1; r <= m - k; ++r) {
      const ExactRational& lower = value[static_cast<size_t>(m - r)];
      if (lower == 0) continue;
      ExactRational weight =
          make_rational(k + 1, m + 1) - make_rational(1, r + 1);
      if (weight == 0) continue;
      weight *= ExactRational(choose(m, r) * tangent_at(tangent, r + 1));
      sum += weight * lower;
    }
    sum *= make_rational(m + 1, m - k);
    sum /= ExactRational(tangent_at(tangent, 1));
    value[static_cast<size_t>(m)] = std::move(sum);
  }
  return to_integer(value[static_cast<size_t>(n)],
                    "tangent_via_power_recurrence");
}

ExactInt secant_via_cauchy(int n, int k, const Triangle& tangent_tri,
                           std::span<const ExactInt> secant) {
  if (n < 0 || k < 0 || k > n) return 0;
  ExactInt sum = 0;
  for (int m = 0; m <= n; ++m) {
    const ExactInt& t = tangent_tri.cell(m, k);
    if (t == 0) continue;
    sum += choose(n, m) * t * secant[static_cast<size_t>(n - m)];
  }
  return sum;
}

ExactInt tangent_via_bell_recurrence(int n, int k, BellVariant variant,
                                     std::span<const ExactInt> tangent) {
  ExactInt trivial;
  if (trivial_tangent_cell(n, k, trivial)) return trivial;

  // Column-by-column fill of a fresh working table; col[m] holds T(m,j).
  std::vector<ExactRational> col(static_cast<size_t>(n) + 1);
  col[0] = 1;
  for (int j = 0; j < k; ++j) {
    std::vector<ExactRational> next(static_cast<size_t>(n) + 1);
    // Rows above n - (k-1-j) can no longer reach (n,k); skip them.
    for (int row = j + 1; row <= n - (k - 1 - j); ++row) {
      const int m = row - 1;
      ExactRational sum(0);
      for (int r = 0; r <= m - j; ++r) {
        const ExactRational& lower = col[static_cast<size_t>(m - r)];
        if (lower == 0) continue;
        const ExactInt c = variant == BellVariant::A ? choose(m, r)
                                                     : choose(m + 1, r + 1);
        sum += ExactRational(c * tangent_at(tangent, r + 1)) * lower;
      }
      if (variant == BellVariant::B) sum /= ExactRational(j + 1);
      next[static_cast<size_t>(row)] = std::move(sum);
    }
    col = std::move(next);
  }
  return to_integer(col[static_cast<size_t>(n)], "tangent_via_bell_recurrence");
}

TBasisCoefficients tangent_coeffs_on_T(int k, const Triangle& arctan_tri) {
  if (k < 1)
    throw std::invalid_argument("tangent_coeffs_on_T: k must be positive");
  TBasisCoefficients out;
  out.k = k;
  const ExactInt denom = fact(k) * fact(k - 1);
  out.coeffs.reserve(static_cast<size_t>(k));
  for (int r = 0; r < k; ++r)
    out.coeffs.push_back(make_rational(arctan_tri.cell(k, r + 1), denom));
  return out;
}

ExactInt tangent_via_arctangent(int n, int k,
                                std::span<const ExactInt> tangent,
                                const Triangle& arctan_tri) {
  ExactInt trivial;
  if (trivial_tangent_cell(n, k, trivial)) return trivial;
  ExactInt sum = 0;
  for (int r = 0; r < k; ++r) {
    const ExactInt& a = arctan_tri.cell(k, r + 1);
    if (a == 0) continue;
    sum += tangent_at(tangent, n + r) * a;
  }
  return to_integer(make_rational(std::move(sum), fact(k) * fact(k - 1)),
                    "tangent_via_arctangent");
}

ExactInt tangent_via_double_sum(int n, int k) {
  ExactInt trivial;
  if (trivial_tangent_cell(n, k, trivial)) return trivial;
  ExactRational total(0);
  for (int a = k; a <= n; ++a) {
    const ExactInt weight = choose(a - 1, k - 1);
    if (weight == 0) continue;
    ExactInt beta_sum = 0;
    for (int b = 1; b <= a; ++b) {
      ExactInt term;
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(b),
                    static_cast<unsigned long>(n));
      term *= choose(a, b);
      if (b % 2 == 0)
        beta_sum += term;
      else
        beta_sum -= term;
    }
    if (beta_sum == 0) continue;
    total += make_rational(weight * beta_sum, two_pow(a));
  }
  total *= make_rational(two_pow(n), fact(k));
  total *= outer_sign(n, k);
  return to_integer(total, "tangent_via_double_sum");
}

ExactInt tangent_via_stirling(int n, int k) {
  ExactInt trivial;
  if (trivial_tangent_cell(n, k, trivial)) return trivial;
  ExactRational sum(0);
  for (int a = k; a <= n; ++a) {
    const ExactInt s2 = stirling2(static_cast<unsigned long>(n),
                                  static_cast<unsigned long>(a));
    const ExactInt c = choose(a - 1, k - 1);
    if (s2 == 0 || c == 0) continue;
    ExactRational term(two_pow(n - a) * s2 * c);
    term *= make_rational(fact(a), fact(k));
    if (a % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  sum *= outer_sign(n, k);
  return to_integer(sum, "tangent_via_stirling");
}

ExactInt tangent_via_lah(int n, int k) {
  ExactInt trivial;
  if (trivial_tangent_cell(n, k, trivial)) return trivial;
  ExactInt sum = 0;
  for (int a = k; a <= n; ++a) {
    sum += two_pow(n - a) *
           lah(static_cast<unsigned long>(a), static_cast<unsigned long>(k)) *
           stirling2(static_cast<unsigned long>(n),
                     static_cast<unsigned long>(a));
  }
  return outer_sign(n, k) * sum;
}

ExactInt tangent_via_central_factorial(int n, int k) {
  ExactInt trivial;
  if (trivial_tangent_cell(n, k, trivial)) return trivial;
  ExactRational sum(0);
  if (n % 2 == 0) {
    const int half_n = n / 2, half_k = k / 2;
    for (int a = half_k; a <= half_n; ++a) {
      ExactRational term = central_factorial(static_cast<unsigned long>(n),
                                             static_cast<unsigned long>(2 * a));
      if (term == 0) continue;
      term *= ExactRational(two_pow(2 * (half_n - a)) *
                            choose(a - 1, a - half_k));
      term *= make_rational(fact(2 * a), fact(k));
      sum += parity_sign(half_n - a) * term;
    }
  } else {
    const int half_n = (n - 1) / 2, half_k = (k - 1) / 2;
    for (int a = half_k; a <= half_n; ++a) {
      ExactRational term = central_factorial(
          static_cast<unsigned long>(n), static_cast<unsigned long>(2 * a + 1));
      if (term == 0) continue;
      // binom(a - 1/2, a - half_k) through the half-integer upper argument.
      term *= binomial(make_rational(2 * a - 1, 2),
                       static_cast<unsigned long>(a - half_k));
      term *= ExactRational(two_pow(2 * (half_n - a)));
      term *= make_rational(fact(2 * a + 1), fact(k));
      sum += parity_sign(half_n - a) * term;
    }
  }
  return to_integer(sum, "tangent_via_central_factorial");
}

bool check_row_identity_a(int n, const Triangle& tangent_tri,
                          std::span<const ExactInt> tangent,
                          std::span<const ExactInt> secant) {
  ExactInt lhs = 0;
  for (int k = 1; k <= n + 1; ++k)
    lhs += fact(k - 1) * tangent_tri.cell(n + 1, k);
  const ExactInt rhs = n % 2 == 1
                           ? ExactInt((two_pow(n) - 1) * tangent_at(tangent, n))
                           : ExactInt(two_pow(n) * secant[static_cast<size_t>(n)]);
  return lhs == rhs;
}

bool check_row_identity_b(int n, const Triangle& tangent_tri,
                          std::span<const ExactInt> tangent,
                          std::span<const ExactInt> secant) {
  ExactInt lhs = 0;
  for (int k = 0; k <= n; ++k) lhs += fact(k) * tangent_tri.cell(n, k);
  const ExactInt& odd_or_even =
      n % 2 == 1 ? tangent_at(tangent, n) : secant[static_cast<size_t>(n)];
  return lhs == two_pow(n - 1) * odd_or_even;
}

bool is_tangent_route(MethodTag m) {
  switch (m) {
    case MethodTag::PowerSeriesRecurrence:
    case MethodTag::BellRecurrenceA:
    case MethodTag::BellRecurrenceB:
    case MethodTag::ArctanBasis:
    case MethodTag::SchwattDoubleSum:
    case MethodTag::Stirling:
    case MethodTag::Lah:
    case MethodTag::CentralFactorial:
      return true;
    default:
      return false;
  }
}

ExactInt tangent_route_value(MethodTag m, int n, int k,
                             std::span<const ExactInt> tangent,
                             const Triangle& arctan_tri) {
  switch (m) {
    case MethodTag::PowerSeriesRecurrence:
      return tangent_via_power_recurrence(n, k, tangent);
    case MethodTag::BellRecurrenceA:
      return tangent_via_bell_recurrence(n, k, BellVariant::A, tangent);
    case MethodTag::BellRecurrenceB:
      return tangent_via_bell_recurrence(n, k, BellVariant::B, tangent);
    case MethodTag::ArctanBasis:
      return tangent_via_arctangent(n, k, tangent, arctan_tri);
    case MethodTag::SchwattDoubleSum:
      return tangent_via_double_sum(n, k);
    case MethodTag::Stirling:
      return tangent_via_stirling(n, k);
    case MethodTag::Lah:
      return tangent_via_lah(n, k);
    case MethodTag::CentralFactorial:
      return tangent_via_central_factorial(n, k);
    default:
      throw std::logic_error("tangent_route_value: not a tangent route");
  }
}

TanPowerExpansion tan_power_expansion(int n, const Triangle& arctan_tri) {
  if (n < 1)
    throw std::invalid_argument("tan_power_expansion: n must be positive");
  TanPowerExpansion out;
  const ExactInt denom = fact(n - 1);
  out.coeffs.reserve(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r)
    out.coeffs.push_back(make_rational(arctan_tri.cell(n, r + 1), denom));
  out.constant =
      n % 2 == 1 ? ExactRational(0) : ExactRational(parity_sign(n / 2));
  return out;
}

}  // namespace tansec
