#include "mvtop/curve/parametrize.hpp"
#include "mvtop/curve/rational_map.hpp"
#include "support.hpp"

#include <random>

using namespace mvtop;

namespace {

RationalFunction rf(const std::string& s) { return parse_rational_function(s); }
Divisor dv(const std::string& s) { return parse_divisor(s); }

const std::vector<std::string> kPlacePool = {"x", "x - 1", "x + 1", "x - 2", "x + 1/2", "x^2 + 1",
                                             "x^2 - 2", "x^2 + x + 1", "inf", "x - 3"};

Divisor random_divisor(std::mt19937& rng, int max_places) {
    std::uniform_int_distribution<int> n(0, max_places);
    std::uniform_int_distribution<std::size_t> pick(0, kPlacePool.size() - 1);
    std::uniform_int_distribution<int> mult(1, 3);
    Divisor d;
    int k = n(rng);
    for (int i = 0; i < k; ++i) {
        d.add(parse_place(kPlacePool[pick(rng)]), mult(rng));
    }
    return d;
}

Rat small_rat(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Rat r;
    do {
        r = make_rat(num(rng), den(rng));
    } while (nonzero && r == 0);
    return r;
}

RationalFunction random_mobius(std::mt19937& rng) {
    for (;;) {
        Rat a = small_rat(rng), b = small_rat(rng), c = small_rat(rng), d = small_rat(rng);
        if (a * d - b * c != 0) {
            return RationalFunction::mobius(a, b, c, d);
        }
    }
}

RationalFunction random_monomial(std::mt19937& rng) {
    std::uniform_int_distribution<int> k(1, 3);
    std::bernoulli_distribution inv(0.5);
    Rat c = small_rat(rng, true);
    int e = k(rng);
    if (inv(rng)) {
        return {UniPoly(c), UniPoly::monomial(Rat(1), e)};
    }
    return {UniPoly::monomial(c, e), UniPoly(1)};
}

RationalFunction random_function(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    for (;;) {
        std::vector<Rat> n(static_cast<std::size_t>(deg(rng) + 1));
        std::vector<Rat> d(static_cast<std::size_t>(deg(rng) + 1));
        for (auto& c : n) {
            c = small_rat(rng);
        }
        for (auto& c : d) {
            c = small_rat(rng);
        }
        UniPoly un(n);
        UniPoly ud(d);
        if (un.is_zero() || ud.is_zero()) {
            continue;
        }
        RationalFunction f(un, ud);
        if (!f.is_constant() && f.degree() <= max_degree) {
            return f;
        }
    }
}

} // namespace

TEST_CASE("divisor syntax and lattice examples") {
    Divisor a = dv("[x]^2 + [inf]");
    Divisor b = dv("[x] + [x - 1]^3");
    CHECK(sup_divisor(a, b) == dv("[x]^2 + [x - 1]^3 + [inf]"));
    CHECK(inf_divisor(a, b) == dv("[x]"));
    CHECK(sup_divisor(a, Divisor{}) == a);
    CHECK(dv("[x^2 + 1]^2").degree() == 4);
    CHECK(dv("0").is_zero());
    CHECK(a.to_string() == parse_divisor(a.to_string()).to_string());
    CHECK(error_kind([] { parse_divisor("[x]^0"); }) == ErrorKind::ParseError);
    CHECK(error_kind([] { parse_divisor("[x^2 - 1]"); }) == ErrorKind::ParseError);
}

TEST_CASE("pullback examples") {
    CHECK(pullback_divisor(rf("x^2"), dv("[x - 1]")) == dv("[x - 1] + [x + 1]"));
    CHECK(pullback_divisor(rf("x^2"), dv("[inf]")) == dv("[inf]^2"));
    Divisor d = dv("[x]^3 + [x^2 + 1] + [inf]^2");
    CHECK(pullback_divisor(RationalFunction::identity(), d) == d);
    CHECK(pullback_divisor(rf("x^2"), dv("[x - 2]")) == dv("[x^2 - 2]"));
    CHECK(pullback_divisor(rf("1/x"), dv("[x]^2")) == dv("[inf]^2"));
    CHECK(pullback_divisor(rf("(x^2 + 1)/x"), dv("[inf]")) == dv("[x] + [inf]"));
    CHECK(error_kind([] { pullback_divisor(ComponentMap(0, rf("1")), dv("[x - 1]")); }) ==
          ErrorKind::ConstantMapOverSupport);
    CHECK(pullback_divisor(ComponentMap(0, rf("2")), dv("[x - 1]")).is_zero());
}

TEST_CASE("ramification examples") {
    CHECK(ramification_divisor(rf("x^2")) == dv("[x] + [inf]"));
    CHECK(ramification_divisor(RationalFunction::identity()).is_zero());
    CHECK(ramification_divisor(rf("x + 1/x")) == dv("[x - 1] + [x + 1]"));
    CHECK(ramification_divisor(rf("1/x^3")) == dv("[x]^2 + [inf]^2"));
    CHECK(ramification_divisor(rf("x^2/(x^2 - 1)")) == dv("[x] + [inf]"));
    CHECK(error_kind([] { ramification_divisor(rf("3")); }) == ErrorKind::ConstantComponent);
}

TEST_CASE("image and preimage of places") {
    RationalFunction f = rf("x^2");
    CHECK(f.image(parse_place("x^2 - 2")) == Place::rational(2));
    CHECK(f.image(parse_place("x^2 + x + 1")) == parse_place("x^2 + x + 1"));
    CHECK(f.image(Place::infinity()) == Place::infinity());
    CHECK(rf("1/(x^2 + 1)").image(parse_place("x^2 + 1")) == Place::infinity());
    CHECK(f.ramification_index(Place::rational(0)) == 2);
    CHECK(f.ramification_index(Place::rational(3)) == 1);
}

TEST_CASE("composition and Mobius inverse") {
    CHECK(rf("x^2").compose(rf("x + 1")) == rf("x^2 + 2x + 1"));
    CHECK(rf("1/x").compose(rf("1/x")).is_identity());
    RationalFunction m = RationalFunction::mobius(2, 1, 1, 1);
    CHECK(m.compose(m.mobius_inverse()).is_identity());
    CHECK(m.mobius_inverse().compose(m).is_identity());
}

TEST_CASE("parametrization examples") {
    auto diag = parametrize_component(parse_poly("x - y"));
    CHECK(diag.x.is_identity());
    CHECK(diag.y.is_identity());
    auto hyp = parametrize_component(parse_poly("x*y - 1"));
    CHECK(hyp.x.is_identity());
    CHECK(hyp.y == rf("1/x"));
    CHECK(error_kind([] { parametrize_component(parse_poly("x^2 + x*y + y^2")); }) ==
          ErrorKind::UnsupportedCurve);
}

TEST_CASE("parametrization classes") {
    for (const char* s : {"x - 3", "y + 1/2", "x^2*y - x + 1", "x*y^3 - 2", "x^2 - 5*y^3", "x^3*y^2 - 7",
                          "x^2 + y^2 - 1", "x^2 + y^2 - 2", "x^2 - y^2 - 3", "x^2 + 3*y^2 - 7",
                          "x^2 - 2*x*y + y^2 + y", "x^2 + y^2 - 25 + x*y"}) {
        INFO(s);
        Poly f = parse_poly(s);
        Parametrization p = parametrize_component(f);
        CHECK(p.x.degree() == f.degree(VY));
        CHECK(p.y.degree() == f.degree(VX));
    }
    CHECK(error_kind([] { parametrize_component(parse_poly("x^2 + y^2 + 1")); }) ==
          ErrorKind::UnsupportedCurve);
    CHECK(error_kind([] { parametrize_component(parse_poly("y^2 - x^3 - x - 1")); }) ==
          ErrorKind::UnsupportedCurve);
    CHECK(error_kind([] { parametrize_component(parse_poly("x^2 - 2")); }) == ErrorKind::UnsupportedCurve);
    CHECK(error_kind([] { parametrize_component(parse_poly("x^2*y^2 - 2")); }) ==
          ErrorKind::UnsupportedCurve);
}

TEST_CASE("pullback is functorial") {
    std::mt19937 rng(11);
    for (int i = 0; i < 150; ++i) {
        std::bernoulli_distribution coin(0.5);
        RationalFunction f = coin(rng) ? random_mobius(rng) : random_monomial(rng);
        RationalFunction g = coin(rng) ? random_mobius(rng) : random_monomial(rng);
        Divisor d = random_divisor(rng, 5);
        INFO(f.to_string() << " ; " << g.to_string() << " ; " << d.to_string());
        CHECK(pullback_divisor(g.compose(f), d) == pullback_divisor(f, pullback_divisor(g, d)));
    }
}

TEST_CASE("pullback multiplies degree") {
    std::mt19937 rng(12);
    for (int i = 0; i < 150; ++i) {
        RationalFunction f = random_function(rng, 4);
        Divisor d = random_divisor(rng, 5);
        INFO(f.to_string() << " ; " << d.to_string());
        CHECK(pullback_divisor(f, d).degree() == f.degree() * d.degree());
    }
}

TEST_CASE("pullback descends inequalities") {
    std::mt19937 rng(13);
    int nontrivial = 0;
    for (int i = 0; i < 300; ++i) {
        RationalFunction f = random_function(rng, 4);
        Divisor d = random_divisor(rng, 4);
        Divisor d2 = random_divisor(rng, 4);
        if (i % 3 == 0) {
            d = d + d2;
        }
        if (leq(pullback_divisor(f, d2), pullback_divisor(f, d))) {
            ++nontrivial;
            INFO(f.to_string() << " ; " << d.to_string() << " ; " << d2.to_string());
            CHECK(leq(d2, d));
        }
    }
    CHECK(nontrivial > 50);
}

TEST_CASE("lattice identities") {
    std::mt19937 rng(14);
    for (int i = 0; i < 200; ++i) {
        Divisor a = random_divisor(rng, 5);
        Divisor b = random_divisor(rng, 5);
        CHECK(sup_divisor(a, b) + inf_divisor(a, b) == a + b);
        CHECK(sup_divisor(a, inf_divisor(a, b)) == a);
        CHECK(inf_divisor(a, sup_divisor(a, b)) == a);
        CHECK(leq(inf_divisor(a, b), sup_divisor(a, b)));
    }
}

TEST_CASE("ramification degree matches Riemann-Hurwitz") {
    std::mt19937 rng(15);
    for (int i = 0; i < 100; ++i) {
        RationalFunction f = random_function(rng, 4);
        INFO(f.to_string());
        CHECK(ramification_divisor(f).degree() == 2 * f.degree() - 2);
    }
}
