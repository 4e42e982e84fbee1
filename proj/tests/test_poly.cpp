#include <catch2/catch_amalgamated.hpp>

#include "vecrec/poly.hpp"
#include "vecrec/scalar.hpp"

using namespace vecrec;

namespace {
Polynomial<Scalar> poly(std::initializer_list<long> coeffs) {
    std::vector<Scalar> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial<Scalar>(std::move(c));
}
}  // namespace

TEST_CASE("polynomial ring basics", "[poly]") {
    const auto x_minus_1 = poly({-1, 1});
    const auto x_plus_1 = poly({1, 1});
    CHECK(x_minus_1 * x_plus_1 == poly({-1, 0, 1}));  // x^2 - 1

    const auto square = poly({1, -2, 1});  // x^2 - 2x + 1
    CHECK(square(Scalar(1)) == Scalar(0));
    CHECK(square(Scalar(3)) == Scalar(4));

    CHECK(square + Polynomial<Scalar>::zero() == square);
    CHECK(square - square == Polynomial<Scalar>::zero());
}

TEST_CASE("normalization strips zero leading coefficients", "[poly]") {
    const Polynomial<Scalar> p(std::vector<Scalar>{Scalar(2), Scalar(0), Scalar(0)});
    CHECK(p.degree() == 0);
    CHECK(Polynomial<Scalar>::zero().degree() == -1);
    CHECK(Polynomial<Scalar>::zero().is_zero());
    CHECK(poly({0, 0}) == Polynomial<Scalar>::zero());
}

TEST_CASE("coefficient access past the end is zero", "[poly]") {
    const auto p = poly({1, 2});
    CHECK(p.coeff(0) == Scalar(1));
    CHECK(p.coeff(5) == Scalar(0));
    CHECK(Polynomial<Scalar>::monomial(3) == poly({0, 0, 0, 1}));
}

TEST_CASE("rendering", "[poly]") {
    CHECK(to_string(poly({1, 2, -1, -2, 1})) == "x^4 - 2x^3 - x^2 + 2x + 1");
    CHECK(to_string(poly({0, 0, 1})) == "x^2");
    CHECK(to_string(poly({-1, 1})) == "x - 1");
    CHECK(to_string(Polynomial<Scalar>::zero()) == "0");
    const Polynomial<Scalar> complex_coeff(std::vector<Scalar>{Scalar::i(), Scalar(1)});
    CHECK(to_string(complex_coeff) == "x + (0+1i)");
}
