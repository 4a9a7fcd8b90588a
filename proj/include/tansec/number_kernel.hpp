#pragma once

#include "tansec/exact.hpp"

namespace tansec {

ExactInt factorial(unsigned long n);

// C(n, k) for a nonnegative integer upper argument; 0 when k > n.
ExactInt binomial_int(unsigned long n, unsigned long k);

// Generalized binomial coefficient with a rational upper argument:
// upper (upper-1) ... (upper-k+1) / k!. For an integer upper with
// 0 <= upper < k the falling factorial hits zero and the result is 0.
ExactRational binomial(const ExactRational& upper, unsigned long k);

// Stirling number of the second kind, computed by the explicit alternating
// sum S(n,k) = (1/k!) sum_{j=1..k} (-1)^(k-j) C(k,j) j^n, with S(0,0) = 1
// and S(n,k) = 0 for k > n.
ExactInt stirling2(unsigned long n, unsigned long k);

// Signed Lah number L_{n,k} = (-1)^n C(n-1,k-1) n!/k!; 0 when k == 0 or
// k > n. The (-1)^n sign is part of the value.
ExactInt lah(unsigned long n, unsigned long k);

// Central factorial number of the second kind,
// T(n,k) = (1/k!) sum_{a=0..k} (-1)^a C(k,a) (k/2 - a)^n, with 0^0 = 1.
// Integral whenever n and k are both even; genuinely rational (powers of
// two in the denominator) in the odd-odd case.
ExactRational central_factorial(unsigned long n, unsigned long k);

}  // namespace tansec
