#include "mvtop/algebra/factor_bi.hpp"
#include "mvtop/transfers/correspondence.hpp"
#include "support.hpp"

#include <random>

using namespace mvtop;

namespace {

RationalFunction rf(const std::string& s) { return parse_rational_function(s); }
ModulusPair mp(const std::string& d, std::set<Place> del = {}) {
    return ModulusPair::single(parse_divisor(d), std::move(del));
}
RationalMap single_map(const RationalFunction& f) {
    RationalMap m;
    m.parts.emplace_back(0, f);
    return m;
}
AdmissibleMorphism morph(const ModulusPair& a, const ModulusPair& b, const std::string& f) {
    return AdmissibleMorphism::make(a, b, single_map(rf(f)));
}
ElemCorr corr(const std::string& f) { return ElemCorr::make(0, 0, parse_poly(f)); }

} // namespace

TEST_CASE("elementary admissibility examples") {
    ModulusPair inf1 = mp("[inf]");
    CHECK_FALSE(check_elem_admissible(graph(0, ComponentMap(0, rf("x^2"))), inf1, inf1));
    CHECK(check_elem_admissible(graph(0, ComponentMap(0, rf("x^2"))), mp("[inf]^2"), inf1));

    ModulusPair gm = mp("[x] + [inf]");
    CHECK(check_elem_admissible(corr("x*y - 1"), gm, gm));
    CHECK_FALSE(check_elem_admissible(corr("x*y - 1"), gm, mp("[x]^2 + [inf]")));

    // y^2 = x is a genuine two-sheeted correspondence
    CHECK(check_elem_admissible(corr("y^2 - x"), gm, mp("[x]^2 + [inf]^2")));
    CHECK_FALSE(check_elem_admissible(corr("y^2 - x"), gm, mp("[x]^3 + [inf]^2")));
    CHECK(check_elem_admissible(corr("y^2 - x"), mp("[x]^3 + [inf]^3"), mp("[x]^6 + [inf]^6")));

    // interior point reaching the boundary
    CHECK(error_kind([&] { (void)check_elem_admissible(corr("y - x + 1"), gm, gm); }) ==
          ErrorKind::InvalidArgument);
    // non-rational target place: y^2 + 1 pulls back along y = x
    CHECK(check_elem_admissible(corr("y - x"), mp("[x^2 + 1]^2"), mp("[x^2 + 1]^2")));
    CHECK_FALSE(check_elem_admissible(corr("y - x"), mp("[x^2 + 1]"), mp("[x^2 + 1]^2")));
    // deleted target place hit from the boundary
    CHECK_FALSE(check_elem_admissible(corr("x*y - 1"), gm, mp("[inf]", {Place::rational(0)})));
}

TEST_CASE("graph admissibility agrees with morphism admissibility") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> mult(0, 3);
    const std::vector<std::string> places = {"[x]", "[inf]", "[x - 1]", "[x + 1]", "[x^2 + 1]"};
    int compared = 0;
    int admissible = 0;
    for (int trial = 0; trial < 6000; ++trial) {
        auto random_divisor = [&] {
            std::string d;
            for (const auto& p : places) {
                int k = mult(rng);
                if (k > 1 || (k == 1 && coeff(rng) > 0)) {
                    d += (d.empty() ? "" : " + ") + p + "^" + std::to_string(k);
                }
            }
            return d.empty() ? std::string("[inf]") : d;
        };
        UniPoly num(std::vector<Rat>{coeff(rng), coeff(rng), coeff(rng)});
        UniPoly den(std::vector<Rat>{coeff(rng), coeff(rng)});
        if (num.is_zero() || den.is_zero()) {
            continue;
        }
        RationalFunction f(num, den);
        if (f.is_constant()) {
            continue;
        }
        ModulusPair m = mp(random_divisor());
        ModulusPair n = mp(random_divisor());
        bool expected = false;
        try {
            expected = check_admissible(single_map(f), m, n).admissible;
        } catch (const Error&) {
            continue;
        }
        ElemCorr g = graph(0, ComponentMap(0, f));
        INFO(f.to_string() << " " << m.to_string() << " " << n.to_string());
        CHECK(check_elem_admissible(g, m, n) == expected);
        CHECK(elem_admissibility(g, m, n, ValuationRoute::Polygon).admissible == expected);
        ++compared;
        admissible += expected ? 1 : 0;
    }
    CHECK(compared > 100);
    CHECK(admissible > 10);
}

TEST_CASE("branch expansion and resultant polygon agree") {
    std::mt19937_64 rng(91);
    std::uniform_int_distribution<long> coeff(-2, 2);
    ModulusPair m = mp("[x]^4 + [inf]^4 + [x - 1]^4 + [x + 1]^4");
    ModulusPair n = mp("[x]^2 + [inf]^3");
    // boundary-supported lead and constant coefficients keep the interior off the target boundary
    const std::vector<Poly> ends = {parse_poly("1"), parse_poly("x"), parse_poly("x - 1"), parse_poly("x^2"),
                                    parse_poly("x*(x + 1)"), parse_poly("(x - 1)^2"), parse_poly("x^2 - 1")};
    std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
    std::uniform_int_distribution<int> ydeg(1, 3);
    int agreed = 0;
    for (int trial = 0; trial < 3000 && agreed < 60; ++trial) {
        int dy = ydeg(rng);
        Poly f = Poly(coeff(rng) == 0 ? 2 : 1) * ends[pick(rng)] * Poly::monomial(1, Exponent{0, dy, 0, 0}) +
                 Poly(coeff(rng) < 0 ? -1 : 1) * ends[pick(rng)];
        for (int j = 1; j < dy; ++j) {
            for (int i = 0; i <= 2; ++i) {
                f += Poly::monomial(coeff(rng), Exponent{i, j, 0, 0});
            }
        }
        if (f.degree(VY) < 1 || !is_irreducible(f)) {
            continue;
        }
        ElemCorr v = ElemCorr::make(0, 0, f);
        ElemAdmissibility a;
        ElemAdmissibility b;
        try {
            a = elem_admissibility(v, m, n, ValuationRoute::Puiseux);
            b = elem_admissibility(v, m, n, ValuationRoute::Polygon);
        } catch (const Error& e) {
            CHECK((e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::UnsupportedBoundary));
            continue;
        }
        INFO(f.to_string());
        CHECK(a.admissible == b.admissible);
        REQUIRE(a.checks.size() == b.checks.size());
        for (std::size_t i = 0; i < a.checks.size(); ++i) {
            CHECK(a.checks[i].slope == b.checks[i].slope);
        }
        ++agreed;
    }
    CHECK(agreed >= 60);
}

TEST_CASE("pushforward examples") {
    ModulusPair gm2 = mp("[x]^2 + [inf]^2");
    ModulusPair gm = mp("[x] + [inf]");
    auto sq = morph(gm2, gm, "x^2");
    REQUIRE(sq.admissible());
    auto pf = push_forward(sq, corr("x*y - 1"), gm2);
    CHECK(pf.image == corr("x^2*y - 1"));
    CHECK(pf.degree == 1);

    auto id = AdmissibleMorphism::identity(gm2);
    auto same = push_forward(id, corr("x*y - 1"), gm2);
    CHECK(same.image == corr("x*y - 1"));
    CHECK(same.degree == 1);

    // graph of h pushed along g is the graph of g o h
    auto h = rf("2*x^3");
    auto pg = push_forward(sq, graph(0, ComponentMap(0, h)), mp("[x]^6 + [inf]^6"));
    CHECK(pg.image == graph(0, ComponentMap(0, rf("x^2").compose(h))));
    CHECK(pg.degree == 1);

    // two-sheeted correspondence collapsing onto a graph
    auto two = push_forward(sq, corr("y^2 - x"), gm);
    CHECK(two.image == corr("y - x"));
    CHECK(two.degree == 2);

    // sheets y = x and y = -x have the same image
    Corr alpha = Corr(corr("y - x")) - Corr(corr("y + x"));
    CHECK(push_forward_linear(sq, alpha, gm2).is_zero());
    CHECK(push_forward_linear(sq, Corr(corr("y + x"), 3), gm2) == Corr(corr("y - x^2"), 3));

    // constant target component
    RationalMap cm;
    cm.parts.push_back(ComponentMap::constant_at(0, Place::rational(2)));
    auto c = AdmissibleMorphism::make(gm, gm, cm);
    auto pc = push_forward(c, corr("y^2 - x"), gm);
    CHECK(pc.image == corr("y - 2"));
    CHECK(pc.degree == 2);
}

TEST_CASE("pushforward is functorial with multiplicative degrees") {
    ModulusPair m = mp("[x]^8 + [inf]^8");
    ModulusPair n = mp("[x]^4 + [inf]^4");
    ModulusPair l = mp("[x]^2 + [inf]^2");
    ModulusPair k = mp("[x] + [inf]");
    const std::vector<std::string> hs = {"x^2", "-x^2", "1/x^2", "x", "1/x", "2*x"};
    const std::vector<std::string> gs = {"x^2", "x", "-1/x", "1/x^2", "3*x^2"};
    const std::vector<std::string> vs = {"y^2 - x", "x*y - 1", "x*y^2 - 1", "y^3 - x^2", "y - x^2",
                                         "x^2*y^2 - 2"};
    int checked = 0;
    for (const auto& hs_ : hs) {
        auto h = morph(n, l, hs_);
        if (!h.admissible()) {
            continue;
        }
        for (const auto& gs_ : gs) {
            auto g = morph(l, k, gs_);
            if (!g.admissible()) {
                continue;
            }
            for (const auto& vs_ : vs) {
                ElemCorr v = corr(vs_);
                if (!check_elem_admissible(v, m, n)) {
                    continue;
                }
                auto direct = push_forward(g.after(h), v, m);
                auto inner = push_forward(h, v, m);
                auto outer = push_forward(g, inner.image, m);
                INFO(vs_ << " along " << hs_ << " then " << gs_);
                CHECK(direct.image == outer.image);
                CHECK(direct.degree == inner.degree * outer.degree);
                ++checked;
            }
        }
    }
    CHECK(checked > 30);
}
