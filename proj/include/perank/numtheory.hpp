#pragma once

// Elementary number theory: divisors, totients, the preperiod/period of
// power residues, and cyclotomic polynomials. Everything is a pure
// function on small integers.

#include <cstdint>
#include <vector>

#include "perank/polynomial.hpp"

namespace perank {

/// Positive divisors of n, ascending. n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Euler totient: count of m in [1, n] with gcd(m, n) = 1. n >= 1.
std::int64_t euler_phi(std::int64_t n);

/// Additive totient: the least dimension in which an integer matrix of
/// multiplicative order n exists, and the lower end of the
/// constant-recursive rank range. Computed as the sum of phi over the
/// maximal prime powers of n, except that a lone factor of 2 (n == 2 mod 4,
/// n > 2) is free. n >= 2.
std::int64_t additive_psi(std::int64_t n);

/// Preperiod and eventual period of the residue sequence (k^e mod ell).
struct OrdPre {
    std::int64_t k = 0;
    std::int64_t ell = 0;
    std::int64_t pre = 0;  ///< preperiod length (0 iff gcd(k, ell) = 1)
    std::int64_t ord = 1;  ///< eventual period length
};

/// Direct tabulation of k^e mod ell until a residue repeats (at most
/// ell + 1 steps). k, ell >= 2.
OrdPre ord_pre(std::int64_t k, std::int64_t ell);

/// The mth cyclotomic polynomial, by repeated exact division in
/// x^m - 1 = prod over d | m of the dth cyclotomic polynomial.
/// Monic of degree euler_phi(m); palindromic coefficients for m >= 2.
IntPolynomial cyclotomic(std::int64_t m);

/// lcm with overflow checking.
std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

}  // namespace perank
