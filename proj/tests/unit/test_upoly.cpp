#include "mvtop/algebra/factor.hpp"
#include "mvtop/error.hpp"

#include "support.hpp"

#include <random>

using namespace mvtop;

namespace {

UniPoly poly(std::initializer_list<long> low_first) {
    std::vector<Rat> v;
    for (long c : low_first) {
        v.emplace_back(c);
    }
    return UniPoly(std::move(v));
}

UniPoly expand(const std::vector<UniFactor>& fs) {
    UniPoly out(1);
    for (const auto& f : fs) {
        out *= f.factor.pow(f.multiplicity);
    }
    return out;
}

} // namespace

TEST_CASE("dense arithmetic and printing") {
    UniPoly x = UniPoly::x();
    UniPoly p = x * x - UniPoly(1);
    CHECK(p.to_string() == "x^2 - 1");
    CHECK(p.degree() == 2);
    auto [q, r] = divmod(p, x - UniPoly(1));
    CHECK(q == x + UniPoly(1));
    CHECK(r.is_zero());
    CHECK(gcd(p, x * x - x) == x - UniPoly(1));
    CHECK(p.eval(3) == 8);
    CHECK(p.compose(x + UniPoly(1)) == x * x + UniPoly(2) * x);
    CHECK(UniPoly().degree() == -1);
    CHECK(poly({0, 0, 3}).multiplicity_of(x) == 2);
    CHECK(poly({1, 2}).reversed(2) == poly({0, 2, 1}));
    CHECK(poly({-3, 0, 6}).primitive() == poly({-1, 0, 2}));
}

TEST_CASE("extended gcd gives a Bezout identity") {
    UniPoly a = poly({-1, 0, 1});
    UniPoly b = poly({2, 1});
    auto e = extended_gcd(a, b);
    CHECK(e.g == UniPoly(1));
    CHECK(e.s * a + e.t * b == e.g);
}

TEST_CASE("factor_uni examples") {
    auto f1 = factor_uni(poly({-1, 0, 1}));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].factor == poly({-1, 1}));
    CHECK(f1[1].factor == poly({1, 1}));

    auto f2 = factor_uni(poly({-2, 0, 1}));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].factor == poly({-2, 0, 1}));

    auto f3 = factor_uni(poly({1, -5, 6}));
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].factor == UniPoly::linear_root(make_rat(1, 2)));
    CHECK(f3[1].factor == UniPoly::linear_root(make_rat(1, 3)));

    CHECK_THROWS_AS(factor_uni(UniPoly()), Error);
    CHECK_THROWS_AS(factor_uni(UniPoly::x().pow(25) + UniPoly(1)), Error);
}

TEST_CASE("factor_uni on products with multiplicity and cyclotomics") {
    UniPoly x = UniPoly::x();
    // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
    auto f = factor_uni(x.pow(8) - UniPoly(1));
    REQUIRE(f.size() == 4);
    CHECK(f[2].factor == poly({1, 0, 1}));
    CHECK(f[3].factor == poly({1, 0, 0, 0, 1}));
    // (x^2-2)^3 (x+5)^2 x
    UniPoly g = poly({-2, 0, 1}).pow(3) * poly({5, 1}).pow(2) * x;
    auto fg = factor_uni(g);
    REQUIRE(fg.size() == 3);
    CHECK(fg[0] == UniFactor{x, 1});
    CHECK(fg[1] == UniFactor{poly({5, 1}), 2});
    CHECK(fg[2] == UniFactor{poly({-2, 0, 1}), 3});
    // x^4 + 4 = (x^2-2x+2)(x^2+2x+2): splits over Q though irreducible mod many primes
    auto h = factor_uni(poly({4, 0, 0, 0, 1}));
    REQUIRE(h.size() == 2);
    // Swinnerton-Dyer polynomial for sqrt2, sqrt3: x^4 - 10x^2 + 1 is irreducible
    CHECK(factor_uni(poly({1, 0, -10, 0, 1})).size() == 1);
}

TEST_CASE("factor_uni re-expansion property") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 150; ++trial) {
        // products of small random pieces keep the degree at most 12
        UniPoly p(1);
        int pieces = 1 + trial % 3;
        for (int k = 0; k < pieces; ++k) {
            std::vector<Rat> v;
            int d = deg(rng);
            for (int i = 0; i <= d; ++i) {
                v.emplace_back(coeff(rng));
            }
            if (v.back() == 0) {
                v.back() = 1;
            }
            p *= UniPoly(v);
        }
        auto fs = factor_uni(p);
        UniPoly e = expand(fs);
        CHECK(e * UniPoly(p.lc()) == p);
        for (const auto& f : fs) {
            CHECK(f.factor.lc() == 1);
            if (f.factor.degree() > 1) {
                CHECK(rational_roots(f.factor).empty());
            }
        }
        for (std::size_t i = 1; i < fs.size(); ++i) {
            CHECK(fs[i - 1].factor < fs[i].factor);
        }
    }
}

TEST_CASE("rational roots") {
    auto r = rational_roots(poly({1, -5, 6}) * poly({-2, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == make_rat(1, 3));
    CHECK(r[1] == make_rat(1, 2));
}
