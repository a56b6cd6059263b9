#include "perank/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "perank/errors.hpp"

namespace perank {

IntPolynomial::IntPolynomial(std::vector<Int128> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::int64_t degree, Int128 c) {
    if (degree < 0) throw std::domain_error("monomial: negative degree");
    std::vector<Int128> v(static_cast<std::size_t>(degree) + 1, Int128(0));
    v.back() = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::int64_t n) {
    if (n < 1) throw std::domain_error("x_pow_minus_one: n must be >= 1");
    std::vector<Int128> v(static_cast<std::size_t>(n) + 1, Int128(0));
    v.front() = Int128(-1);
    v.back() = Int128(1);
    return IntPolynomial(std::move(v));
}

Int128 IntPolynomial::coeff(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return Int128(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

bool IntPolynomial::is_palindromic() const {
    for (std::size_t i = 0, j = coeffs_.size(); i < j; ++i)
        if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
    return true;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int128> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int128(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(static_cast<std::int64_t>(i)) + b.coeff(static_cast<std::int64_t>(i));
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int128> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int128(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(static_cast<std::int64_t>(i)) - b.coeff(static_cast<std::int64_t>(i));
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int128> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int128(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
}

std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    if (!b.is_monic()) throw unsupported_error("divmod: only division by monic polynomials is supported");
    std::vector<Int128> rem = a.coeffs();
    const std::int64_t db = b.degree();
    if (a.degree() < db) return {IntPolynomial(), a};
    std::vector<Int128> quot(static_cast<std::size_t>(a.degree() - db) + 1, Int128(0));
    for (std::int64_t i = a.degree(); i >= db; --i) {
        Int128 c = rem[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (std::int64_t j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::int64_t i = degree(); i >= 0; --i) {
        Int128 c = coeff(i);
        if (c.is_zero()) continue;
        const bool first = out.empty();
        if (c.sign() < 0)
            out += first ? "-" : " - ";
        else if (!first)
            out += " + ";
        Int128 mag = c.sign() < 0 ? -c : c;
        const bool unit = mag == Int128(1);
        if (i == 0) {
            out += mag.str();
        } else {
            if (!unit) out += mag.str() + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace perank
