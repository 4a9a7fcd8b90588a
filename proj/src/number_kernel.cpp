#include "tansec/number_kernel.hpp"

namespace tansec {

ExactInt factorial(unsigned long n) {
  ExactInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

ExactInt binomial_int(unsigned long n, unsigned long k) {
  ExactInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

ExactRational binomial(const ExactRational& upper, unsigned long k) {
  ExactRational product(1);
  ExactRational factor = upper;
  for (unsigned long i = 0; i < k; ++i) {
    product *= factor;
    factor -= 1;
  }
  return product / ExactRational(factorial(k));
}

ExactInt stirling2(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (n == 0) return 1;  // k == 0 here; S(0,0) = 1
  ExactInt sum = 0;
  for (unsigned long j = 1; j <= k; ++j) {
    ExactInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), j, n);
    term *= binomial_int(k, j);
    if ((k - j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  // The alternating sum equals k! S(n,k); the division is exact.
  ExactInt result;
  mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), factorial(k).get_mpz_t());
  return result;
}

ExactInt lah(unsigned long n, unsigned long k) {
  if (k == 0 || k > n) return 0;
  ExactInt magnitude = binomial_int(n - 1, k - 1) * factorial(n);
  mpz_divexact(magnitude.get_mpz_t(), magnitude.get_mpz_t(),
               factorial(k).get_mpz_t());
  return n % 2 == 0 ? magnitude : -magnitude;
}

ExactRational central_factorial(unsigned long n, unsigned long k) {
  ExactRational sum(0);
  for (unsigned long a = 0; a <= k; ++a) {
    // (k/2 - a)^n with 0^0 = 1.
    ExactRational base = make_rational(ExactInt(k) - 2 * ExactInt(a), 2);
    ExactRational term = rational_pow(base, n);
    term *= ExactRational(binomial_int(k, a));
    if (a % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum / ExactRational(factorial(k));
}

}  // namespace tansec
