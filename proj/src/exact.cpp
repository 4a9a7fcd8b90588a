#include "tansec/exact.hpp"

#include <utility>

namespace tansec {

ExactRational make_rational(ExactInt num, ExactInt den) {
  ExactRational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

ExactInt to_integer(const ExactRational& q, const std::string& what) {
  if (!is_integer(q)) {
    throw inconsistency_error(what + ": expected an integer, got " +
                              q.get_str());
  }
  return q.get_num();
}

ExactInt int_pow(const ExactInt& base, unsigned long exp) {
  ExactInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

ExactRational rational_pow(const ExactRational& base, unsigned long exp) {
  if (exp == 0) return ExactRational(1);
  ExactRational result;
  mpz_pow_ui(mpq_numref(result.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(result.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return result;  // canonical since base was
}

}  // namespace tansec
