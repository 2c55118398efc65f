#include "mvtop/algebra/poly.hpp"
#include "mvtop/error.hpp"

#include "support.hpp"

using namespace mvtop;

TEST_CASE("parse and print round trip") {
    Poly p = parse_poly("x^2 - 2*x + 1");
    CHECK(p.to_string() == "x^2 - 2*x + 1");
    CHECK(parse_poly("(x - y)*(x + y)") == parse_poly("x^2 - y^2"));
    CHECK(parse_poly("1/2*x + 3/4") == Poly::var(VX) * Poly(make_rat(1, 2)) + Poly(make_rat(3, 4)));
    CHECK(parse_poly("2x y") == parse_poly("2*x*y"));
    CHECK(parse_poly("-x^2") == -(Poly::var(VX) * Poly::var(VX)));
    auto [n, d] = parse_fraction("(x^2 + 1)/x");
    CHECK(n == parse_poly("x^2 + 1"));
    CHECK(d == Poly::var(VX));
    CHECK_THROWS_AS(parse_poly("x +"), Error);
    CHECK_THROWS_AS(parse_poly("w"), Error);
    CHECK_THROWS_AS(parse_poly("1/x"), Error);
}

TEST_CASE("exact division") {
    Poly a = parse_poly("x^3 - y^3");
    auto q = exact_div(a, parse_poly("x - y"));
    REQUIRE(q);
    CHECK(*q == parse_poly("x^2 + x*y + y^2"));
    CHECK_FALSE(exact_div(a, parse_poly("x + y")));
}

TEST_CASE("resultant examples") {
    CHECK(resultant(parse_poly("y - x"), parse_poly("y^2 - z"), VY) == parse_poly("x^2 - z"));
    CHECK(resultant(parse_poly("y - x"), parse_poly("y - x"), VY).is_zero());
    Poly r = resultant(parse_poly("x*y - 1"), parse_poly("z - y^2"), VY);
    CHECK(r.primitive() == parse_poly("x^2*z - 1"));
    CHECK_THROWS_AS(resultant(parse_poly("x"), parse_poly("y"), VY), Error);
    // univariate: Res(x^2-1, x-2) = 3 up to sign
    Poly u = resultant(parse_poly("x^2 - 1"), parse_poly("x - 2"), VX);
    CHECK(u.is_constant());
    CHECK(abs(u.constant_term()) == 3);
}

TEST_CASE("rational substitution numerator") {
    Poly f = parse_poly("x^2 + y");
    Poly g = f.substitute_fraction(VX, Poly(1), Poly::var(VT));
    CHECK(g == parse_poly("1 + y*t^2"));
}
