#include <doctest.h>

#include <stdexcept>

#include "perank/errors.hpp"
#include "perank/numtheory.hpp"
#include "perank/polynomial.hpp"

using namespace perank;

TEST_SUITE("polynomial") {

TEST_CASE("degree and coefficient access") {
    const IntPolynomial z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    const IntPolynomial p = IntPolynomial::x_pow_minus_one(3);
    CHECK(p.degree() == 3);
    CHECK(p.coeff(0) == Int128(-1));
    CHECK(p.coeff(3) == Int128(1));
    CHECK(p.coeff(17) == Int128(0));
    CHECK(p.is_monic());
}

TEST_CASE("string form") {
    CHECK(IntPolynomial::one().str() == "1");
    CHECK(IntPolynomial().str() == "0");
    CHECK((cyclotomic(3)).str() == "x^2 + x + 1");
    CHECK((IntPolynomial::monomial(5, Int128(2)) - IntPolynomial::one() - IntPolynomial::one()).str() ==
          "2*x^5 - 2");
}

TEST_CASE("arithmetic") {
    const IntPolynomial a = cyclotomic(1) * cyclotomic(2);
    CHECK(a == IntPolynomial::x_pow_minus_one(2));
    CHECK((a - a).is_zero());
    CHECK(a + IntPolynomial::one() == IntPolynomial::monomial(2));
}

TEST_CASE("divmod by a monic divisor") {
    const auto [q, r] = divmod(IntPolynomial::x_pow_minus_one(2), cyclotomic(1));
    CHECK(q == cyclotomic(2));
    CHECK(r.is_zero());
    const auto [q2, r2] = divmod(IntPolynomial::monomial(2), cyclotomic(2));
    CHECK(q2.str() == "x - 1");
    CHECK(r2 == IntPolynomial::one());
    CHECK_THROWS_AS(divmod(IntPolynomial::one(), IntPolynomial()), std::domain_error);
    CHECK_THROWS_AS(divmod(IntPolynomial::one(), IntPolynomial::monomial(1, Int128(2))), unsupported_error);
}

TEST_CASE("palindromic coefficient tuples") {
    CHECK(cyclotomic(2).is_palindromic());
    CHECK(cyclotomic(6).is_palindromic());
    CHECK(cyclotomic(105).is_palindromic());
    CHECK_FALSE(cyclotomic(1).is_palindromic());
}

}  // TEST_SUITE
