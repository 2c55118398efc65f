#include "mvtop/algebra/factor_bi.hpp"
#include "mvtop/algebra/newton.hpp"
#include "mvtop/algebra/puiseux.hpp"
#include "mvtop/error.hpp"
#include "support.hpp"

#include <random>

using namespace mvtop;

namespace {

const Place kZero = Place::rational(0);

} // namespace

TEST_CASE("puiseux examples") {
    auto b1 = puiseux_branches(parse_poly("y^2 - x"), kZero);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].ramification == 2);
    CHECK(*b1[0].y_valuation == 1);
    CHECK(b1[0].rational);

    auto b2 = puiseux_branches(parse_poly("y - x^2"), kZero);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].ramification == 1);
    CHECK(*b2[0].y_valuation == 2);

    auto b3 = puiseux_branches(parse_poly("y^2 - x^2"), kZero);
    REQUIRE(b3.size() == 2);
    for (const auto& b : b3) {
        CHECK(b.ramification == 1);
        CHECK(*b.y_valuation == 1);
        REQUIRE_FALSE(b.y_terms.empty());
        CHECK(abs(b.y_terms[0]) == 1);
    }
}

TEST_CASE("puiseux non-rational residue, infinity and y -> infinity") {
    // y^2 + x^2: residual z^2 + 1 -> one place with residue degree 2
    auto b = puiseux_branches(parse_poly("y^2 + x^2"), kZero);
    REQUIRE(b.size() == 1);
    CHECK(b[0].residue_degree == 2);
    CHECK_FALSE(b[0].rational);
    CHECK(*b[0].y_valuation == 1);
    // x*y - 1 at 0: y -> infinity with v(y) = -1
    auto c = puiseux_branches(parse_poly("x*y - 1"), kZero);
    REQUIRE(c.size() == 1);
    CHECK(*c[0].y_valuation == -1);
    // y - x^2 at infinity: 1/x = T, y = T^-2
    auto d = puiseux_branches(parse_poly("y - x^2"), Place::infinity());
    REQUIRE(d.size() == 1);
    CHECK(*d[0].y_valuation == -2);
    // y^2 - x^3 (cusp): one branch, e = 2, v(y) = 3
    auto cusp = puiseux_branches(parse_poly("y^2 - x^3"), kZero);
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].ramification == 2);
    CHECK(*cusp[0].y_valuation == 3);
    // tacnode-like y^2 - 2*x^2*y + x^4 - x^5 needs a second Duval level
    auto t = puiseux_branches(parse_poly("(y - x^2)^2 - x^5"), kZero);
    REQUIRE(t.size() == 1);
    CHECK(t[0].ramification == 2);
    CHECK(*t[0].y_valuation == 4);
    // exact root y = 0
    auto z = puiseux_branches(parse_poly("y*(y - 1)"), kZero);
    REQUIRE(z.size() == 2);
}

TEST_CASE("puiseux series satisfy the curve equation") {
    for (const char* src : {"y^2 - x - x^2", "y^3 - x^2*y - x^4", "(y - x^2)^2 - x^5",
                            "y^2*x - x^3 + y", "x*y^2 - 1 - x"}) {
        Poly f = parse_poly(src);
        for (const auto& b : puiseux_branches(f, kZero, 10)) {
            if (!b.rational || !b.y_valuation) {
                continue;
            }
            // substitute truncated series: F vanishes to order beyond the leading balance
            Exponent te{};
            te[VT] = b.ramification;
            Poly xt = Poly::monomial(b.x_scale, te);
            long shift = -std::min<long>(b.y_low, 0);
            Poly yt;
            for (std::size_t i = 0; i < b.y_terms.size(); ++i) {
                Exponent e{};
                e[VT] = static_cast<int>(b.y_low + static_cast<long>(i) + shift);
                yt += Poly::monomial(b.y_terms[i], e);
            }
            Exponent se{};
            se[VT] = static_cast<int>(shift);
            Poly g = recenter(f, b.center);
            Poly r = g.substitute(VX, xt).substitute_fraction(VY, yt, Poly::monomial(1, se));
            INFO(src);
            if (!r.is_zero()) {
                // only the truncation of y contributes
                CHECK(r.low_degree(VT) >= b.y_valid + shift);
            }
        }
    }
}

TEST_CASE("puiseux local degree invariant on random curves") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(1, 4);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Poly f;
        int dx = deg(rng);
        int dy = deg(rng);
        for (int i = 0; i <= dx; ++i) {
            for (int j = 0; j <= dy; ++j) {
                if (coeff(rng) % 2 == 0) {
                    f += Poly::monomial(coeff(rng), Exponent{i, j, 0, 0});
                }
            }
        }
        f += Poly::monomial(1, Exponent{0, dy, 0, 0});
        if (f.degree(VY) < 1 || !is_squarefree_in(f, VY)) {
            continue;
        }
        for (const Place& c : {Place::rational(0), Place::rational(1), Place::infinity()}) {
            if (recenter(f, c).eval(VX, 0).is_zero()) {
                continue; // vertical component through the center
            }
            std::vector<PuiseuxBranch> bs;
            try {
                bs = puiseux_branches(f, c);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::UnsupportedBoundary);
                continue;
            }
            int all = 0;
            int finite = 0;
            for (const auto& b : bs) {
                all += b.ramification * b.residue_degree;
                if (!b.y_valuation || *b.y_valuation >= 0) {
                    finite += b.ramification * b.residue_degree;
                }
            }
            Poly g = recenter(f, c);
            int drop = g.degree(VY) - g.eval(VX, 0).degree(VY);
            CHECK(all == f.degree(VY));
            CHECK(finite == f.degree(VY) - drop);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("root valuations from the resultant polygon") {
    // w^2 - x at x = 0: both roots valuation 1/2
    auto rv = root_valuations({UniPoly(std::vector<Rat>{0, -1}), UniPoly(), UniPoly(1)},
                              Place::rational(0));
    REQUIRE(rv.finite.size() == 1);
    CHECK(rv.finite[0].first == make_rat(1, 2));
    CHECK(rv.finite[0].second == 2);
    // at a non-rational place: w - (x^2+1)^3 has valuation 3 at x^2+1
    UniPoly q = UniPoly(std::vector<Rat>{1, 0, 1});
    auto rq = root_valuations({-q.pow(3), UniPoly(1)}, Place::finite(q));
    REQUIRE(rq.finite.size() == 1);
    CHECK(rq.finite[0].first == 3);
}
