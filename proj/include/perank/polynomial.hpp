#pragma once

// Dense integer-coefficient polynomials, stored low degree first with
// trailing zeros trimmed. Only the operations the rank machinery needs:
// ring arithmetic and exact division by monic divisors.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "perank/int128.hpp"

namespace perank {

class IntPolynomial {
  public:
    /// Zero polynomial.
    IntPolynomial() = default;
    /// From coefficients, index i = coefficient of x^i; trims trailing zeros.
    explicit IntPolynomial(std::vector<Int128> coeffs);

    static IntPolynomial one() { return IntPolynomial({Int128(1)}); }
    /// c * x^d
    static IntPolynomial monomial(std::int64_t degree, Int128 c = Int128(1));
    /// x^n - 1
    static IntPolynomial x_pow_minus_one(std::int64_t n);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Int128(1); }
    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// Coefficient of x^i (0 beyond the stored range).
    Int128 coeff(std::int64_t i) const;
    const std::vector<Int128>& coeffs() const { return coeffs_; }

    bool is_palindromic() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    /// Human-readable form, highest degree first, e.g. "x^2 - x + 1".
    std::string str() const;

  private:
    std::vector<Int128> coeffs_;
    void trim();
};

/// Quotient and remainder of a by b. b must be nonzero (std::domain_error)
/// and monic (unsupported_error): monic division keeps every intermediate
/// value an integer, which is all this library needs.
std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace perank
