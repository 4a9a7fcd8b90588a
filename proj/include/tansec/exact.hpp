#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tansec {

// Arbitrary-precision signed integer; the value type of every triangle
// entry and classical sequence element. Arithmetic is exact, no rounding.
using ExactInt = mpz_class;

// Arbitrary-precision rational. GMP keeps results canonical (lowest terms,
// positive denominator) as long as the operands are canonical; build values
// from raw numerator/denominator pairs through make_rational only.
using ExactRational = mpq_class;

// A quantity that must reduce to an integer did not. This always signals a
// bug in a formula implementation, never bad user input.
class inconsistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

ExactRational make_rational(ExactInt num, ExactInt den);

inline bool is_integer(const ExactRational& q) { return q.get_den() == 1; }

// Exact narrowing to ExactInt; throws inconsistency_error when q has a
// nontrivial denominator. `what` names the offending computation.
ExactInt to_integer(const ExactRational& q, const std::string& what);

// base^exp, exp >= 0.
ExactInt int_pow(const ExactInt& base, unsigned long exp);

// base^exp, exp >= 0, with 0^0 = 1.
ExactRational rational_pow(const ExactRational& base, unsigned long exp);

// (-1)^e, valid for negative e as well.
inline int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace tansec
