#include "perank/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace perank {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Int128(1);
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::domain_error("matrix dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return out;
}

IntMatrix circulant(const std::vector<std::int64_t>& first_row) {
    const std::size_t n = first_row.size();
    if (n == 0) throw std::domain_error("circulant of empty tuple");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Int128(first_row[(j + n - i) % n]);
    return m;
}

std::size_t rank(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Int128 prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Pivot search in column c at or below row r.
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        const Int128 p = m.at(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Int128 f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m.at(i, j) = exact_div(p * m.at(i, j) - f * m.at(r, j), prev);
            m.at(i, c) = Int128(0);
        }
        prev = p;
        ++r;
    }
    return r;
}

IntMatrix companion(const IntPolynomial& p) {
    if (!p.is_monic() || p.degree() < 1) throw std::domain_error("companion matrix needs a monic polynomial of degree >= 1");
    const std::size_t d = static_cast<std::size_t>(p.degree());
    IntMatrix m(d, d);
    for (std::size_t i = 1; i < d; ++i) m.at(i, i - 1) = Int128(1);
    for (std::size_t i = 0; i < d; ++i) m.at(i, d - 1) = -p.coeff(static_cast<std::int64_t>(i));
    return m;
}

std::int64_t matrix_order(const IntMatrix& m, std::int64_t cap) {
    if (m.rows() != m.cols()) throw std::domain_error("matrix order needs a square matrix");
    const IntMatrix id = identity_matrix(m.rows());
    IntMatrix pow = m;
    for (std::int64_t e = 1; e <= cap; ++e) {
        if (pow == id) return e;
        if (e < cap) pow = multiply(pow, m);
    }
    return 0;
}

}  // namespace perank
