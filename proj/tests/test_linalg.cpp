#include <doctest.h>

#include <stdexcept>

#include "perank/errors.hpp"
#include "perank/linalg.hpp"
#include "perank/numtheory.hpp"

using namespace perank;

TEST_SUITE("linalg") {

TEST_CASE("int128 guards") {
    const Int128 big = Int128(std::int64_t{1} << 62) * Int128(4);  // 2^64
    CHECK(big.str() == "18446744073709551616");
    CHECK_THROWS_AS((void)big.to_int64(), std::overflow_error);
    CHECK(exact_div(Int128(-6), Int128(3)) == Int128(-2));
    CHECK_THROWS_AS((void)exact_div(Int128(7), Int128(2)), std::logic_error);
    CHECK_THROWS_AS((void)exact_div(Int128(1), Int128(0)), std::domain_error);
    Int128 huge = Int128(1);
    for (int i = 0; i < 126; ++i) huge = huge * Int128(2);
    CHECK_THROWS_AS((void)(huge * Int128(4)), std::overflow_error);
}

TEST_CASE("multiply and identity") {
    const IntMatrix i3 = identity_matrix(3);
    IntMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m.at(r, c) = Int128(static_cast<std::int64_t>(r * 3 + c));
    CHECK(multiply(i3, m) == m);
    CHECK(multiply(m, i3) == m);
    CHECK_THROWS_AS(multiply(m, identity_matrix(2)), std::domain_error);
}

TEST_CASE("circulant layout") {
    const IntMatrix c = circulant({0, 1, 2});
    CHECK(c.at(0, 0) == Int128(0));
    CHECK(c.at(0, 2) == Int128(2));
    // Row 1 is row 0 shifted right once.
    CHECK(c.at(1, 0) == Int128(2));
    CHECK(c.at(1, 1) == Int128(0));
    CHECK(c.at(2, 0) == Int128(1));
}

TEST_CASE("rank of circulants") {
    CHECK(rank(circulant({1, 1, 1, 1})) == 1);
    CHECK(rank(circulant({1, -1})) == 1);
    CHECK(rank(circulant({0, 1})) == 2);
    CHECK(rank(circulant({0, 1, 0, 1})) == 2);
    CHECK(rank(circulant({0, 1, 1, 1})) == 4);
    CHECK(rank(circulant({0, 1, 2, 3})) == 4);
    CHECK(rank(circulant({-1, 0, 1})) == 2);
    CHECK(rank(IntMatrix(4, 4)) == 0);
}

TEST_CASE("rank of a rectangular matrix") {
    IntMatrix m(3, 2);
    m.at(0, 0) = Int128(1);
    m.at(0, 1) = Int128(2);
    m.at(1, 0) = Int128(2);
    m.at(1, 1) = Int128(4);
    m.at(2, 0) = Int128(0);
    m.at(2, 1) = Int128(1);
    CHECK(rank(m) == 2);
}

TEST_CASE("companion matrix acts as multiplication by x") {
    const IntPolynomial p = cyclotomic(3);  // x^2 + x + 1
    const IntMatrix c = companion(p);
    CHECK(c.rows() == 2);
    CHECK(c.at(0, 0) == Int128(0));
    CHECK(c.at(1, 0) == Int128(1));
    CHECK(c.at(0, 1) == Int128(-1));
    CHECK(c.at(1, 1) == Int128(-1));
    CHECK_THROWS_AS(companion(IntPolynomial::one()), std::domain_error);
    CHECK_THROWS_AS(companion(IntPolynomial::monomial(2, Int128(3))), std::domain_error);
}

TEST_CASE("matrix_order finds cyclotomic orders") {
    CHECK(matrix_order(identity_matrix(4), 10) == 1);
    CHECK(matrix_order(companion(cyclotomic(1)), 10) == 1);
    CHECK(matrix_order(companion(cyclotomic(2)), 10) == 2);
    CHECK(matrix_order(companion(cyclotomic(12)), 20) == 12);
    // A 6x6 integer matrix of multiplicative order 15: the companion of
    // Phi_3 Phi_5, witnessing psi(15) = 6.
    CHECK(matrix_order(companion(cyclotomic(3) * cyclotomic(5)), 30) == 15);
    CHECK(additive_psi(15) == 6);
    // Shift matrix is nilpotent: no power is the identity.
    IntMatrix shift(2, 2);
    shift.at(0, 1) = Int128(1);
    CHECK(matrix_order(shift, 50) == 0);
}

}  // TEST_SUITE
