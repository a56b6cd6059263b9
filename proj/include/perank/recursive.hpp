#pragma once

// Constant-recursive rank of a periodic sequence: the minimal order of a
// recurrence s(n+d) = c_{d-1} s(n+d-1) + ... + c_0 s(n) with c_0 != 0.
// For periodic inputs this equals the rank of the period's circulant
// matrix, the minimal characteristic polynomial is a product of distinct
// cyclotomics dividing x^ell - 1, and the attainable ranks over Per(ell)
// are the sums of phi over divisor subsets with lcm = ell.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "perank/polynomial.hpp"
#include "perank/sequences.hpp"

namespace perank {

/// Exact rational, normalized: positive denominator, reduced. Every
/// recurrence built here has integer coefficients (den = 1); the pair
/// form keeps the type honest about what a recurrence coefficient is.
struct Rational {
    Int128 num{0};
    Int128 den{1};
};
Rational make_rational(Int128 num, Int128 den);

struct Recurrence {
    std::int64_t order = 1;
    std::vector<Rational> coeffs;  ///< c_0 .. c_{order-1}, c_0 != 0
    IntPolynomial char_poly;       ///< x^d - c_{d-1} x^{d-1} - ... - c_0
};

/// Reads the recurrence off a monic characteristic polynomial of degree
/// >= 1 with nonzero constant term (a zero constant term would force
/// c_0 = 0).
Recurrence recurrence_from_char_poly(const IntPolynomial& chi);

/// Minimal recurrence order with nonzero trailing coefficient; computed
/// as the rank over Q of circulant(s.period). 1 for constant sequences.
std::int64_t rank_cr(const PeriodicSequence& s);

/// The minimal-degree monic polynomial dividing x^ell - 1 whose
/// recurrence annihilates s, found by greedily removing cyclotomic
/// factors from x^ell - 1 (largest degree first). Its degree equals
/// rank_cr(s); the two computations are independent and cross-check
/// each other in the test suite.
IntPolynomial minimal_char_poly(const PeriodicSequence& s);

/// First `count` terms from the initial conditions (count >= order).
std::vector<std::int64_t> unroll(const Recurrence& rec, const std::vector<std::int64_t>& initial,
                                 std::int64_t count);

/// Impulse witness for a divisor set with lcm = ell >= 2: chi = product
/// of the cyclotomics of the set, initial conditions (0, ..., 0, 1).
/// The result lies in Per(ell) with rank_cr = sum of phi over the set;
/// both are verified before returning.
PeriodicSequence witness_cr(const std::vector<std::int64_t>& divisor_set);

struct CrMuggleReport {
    std::int64_t ell = 0;
    std::int64_t range_lo = 0;  ///< additive_psi(ell)
    std::int64_t range_hi = 0;  ///< ell
    std::vector<std::int64_t> muggles;
    std::vector<std::int64_t> magics;
    /// muggle value -> (divisor set achieving it, verified witness).
    std::map<std::int64_t, std::pair<std::vector<std::int64_t>, PeriodicSequence>> witnesses;
};

/// The attainable constant-recursive ranks over Per(ell): all values
/// sum phi(d_i) over subsets of Divs(ell) with lcm = ell. Each muggle
/// carries the smallest-cardinality (then lexicographically least)
/// divisor set and its impulse witness. ell >= 2.
CrMuggleReport muggle_report_cr(std::int64_t ell);

}  // namespace perank
