#pragma once

// Exact-integer combinatorics converted to double at the boundary.
// All quantities used by the chaos algebra (factorials, binomials,
// Hermite linearization weights) are computed in extended integer
// precision within the supported degree range.

namespace aw {

// n!; exact for n <= 33, running double product above that.
double factorial(int n);

// C(n, k); 0 for k < 0 or k > n.
double binomial(int n, int k);

// n!! for odd n >= -1, with (-1)!! = 1.
double double_factorial_odd(int n);

// n (n-1) ... (n-k+1); equals n!/(n-k)!.
double falling_factorial(int n, int k);

// k! C(a,k) C(b,k): weight of h_{a+b-2k} in the product h_a h_b of
// monic probabilists' Hermite polynomials.
double hermite_linearization(int a, int b, int k);

// E|Z|^k for Z standard normal.
double abs_normal_moment(int k);

// x^n for integer n >= 0 by binary powering (deterministic).
double pow_int(double x, int n);

}  // namespace aw
