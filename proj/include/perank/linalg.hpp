#pragma once

// Exact integer matrices. Rank is over Q, computed fraction-free so the
// only failure mode is Int128 overflow, never rounding.

#include <cstdint>
#include <vector>

#include "perank/int128.hpp"
#include "perank/polynomial.hpp"

namespace perank {

class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int128(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int128& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int128& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  private:
    std::size_t rows_, cols_;
    std::vector<Int128> data_;
};

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Circulant whose first row is `first_row`; row i is the cyclic right
/// shift of row i-1.
IntMatrix circulant(const std::vector<std::int64_t>& first_row);

/// Rank over Q via fraction-free Bareiss elimination.
std::size_t rank(IntMatrix m);

/// Companion matrix of a monic polynomial, acting on coefficient columns:
/// column j of the result is x * x^j reduced mod p.
IntMatrix companion(const IntPolynomial& p);

/// Multiplicative order of m, or 0 if no power up to `cap` is the
/// identity. m must be square.
std::int64_t matrix_order(const IntMatrix& m, std::int64_t cap);

}  // namespace perank
