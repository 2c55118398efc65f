#include "mvtop/modulus/iso.hpp"
#include "mvtop/squares/msquare.hpp"
#include "support.hpp"

#include <random>

using namespace mvtop;

namespace {

RationalFunction rf(const std::string& s) { return parse_rational_function(s); }
ModulusPair mp(const std::string& d, std::set<Place> deleted = {}) {
    return ModulusPair::single(parse_divisor(d), std::move(deleted));
}
RationalMap single_map(const std::string& f) {
    RationalMap m;
    m.parts.emplace_back(0, rf(f));
    return m;
}
AdmissibleMorphism morph(const ModulusPair& a, const ModulusPair& b, const std::string& f) {
    return AdmissibleMorphism::make(a, b, single_map(f));
}

std::string mult(int k) { return k == 1 ? "" : "^" + std::to_string(k); }

ModulusPair kummer_u(int d) { return mp("[x] + [inf] + [x - 1]" + mult(d)); }
ModulusPair kummer_v(int c) { return mp("[x]^2 + [inf]^2 + [x + 1]" + mult(c)); }
const ModulusPair kBase = ModulusPair::single(parse_divisor("[x] + [inf]"));

RationalFunction random_map(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (;;) {
        Rat a = num(rng), b = num(rng), c = num(rng), d = num(rng);
        if (a * d - b * c == 0) {
            continue;
        }
        RationalFunction m = RationalFunction::mobius(a, b, c, d);
        switch (kind(rng)) {
        case 0: return m;
        case 1: return rf("x^2").compose(m);
        default: return rf("x + 1/x").compose(m);
        }
    }
}

} // namespace

TEST_CASE("admissibility examples") {
    auto r1 = check_admissible(single_map("x^2"), mp("[x]^2 + [inf]^2"), kBase);
    CHECK(r1.admissible);
    CHECK(r1.minimal);
    auto r2 = check_admissible(single_map("x^2"), mp("[x] + [inf]^2"), kBase);
    CHECK_FALSE(r2.admissible);
    auto m = mp("[x - 1]^3 + [x^2 + 1]");
    auto r3 = check_admissible(RationalMap::identity(1), m, m);
    CHECK(r3.admissible);
    CHECK(r3.minimal);
    CHECK(r3.ambient);
    CHECK(error_kind([] { check_admissible(single_map("x^2"), mp("[inf]^2"), kBase); }) ==
          ErrorKind::InteriorViolation);
    CHECK(error_kind([] {
              check_admissible(RationalMap::identity(1), mp("[x] + [inf]"), mp("[inf]", {Place::rational(0)}));
          }) == ErrorKind::NonProperSource);
    auto r4 = check_admissible(RationalMap::identity(1), mp("[inf]", {Place::rational(0)}),
                               mp("[inf]", {Place::rational(0)}));
    CHECK(r4.minimal);
    // constant components land in the interior
    RationalMap c;
    c.parts.emplace_back(0, rf("5"));
    CHECK(check_admissible(c, mp("[x]"), kBase).admissible);
    CHECK(error_kind([&] { check_admissible(c, mp("[x]"), mp("[x - 5]")); }) == ErrorKind::InteriorViolation);
}

TEST_CASE("disjoint union") {
    auto du = disjoint_union(mp("[inf]"), mp("[x]"));
    REQUIRE(du.pair.size() == 2);
    CHECK(du.pair.divisor(0) == parse_divisor("[inf]"));
    CHECK(du.pair.divisor(1) == parse_divisor("[x]"));
    CHECK(du.first.minimal());
    CHECK(du.second.minimal());
    CHECK(disjoint_union(kBase, ModulusPair::empty()).pair.same_as(kBase));
    CHECK(disjoint_union(ModulusPair::empty(), ModulusPair::empty()).pair.is_empty());
}

TEST_CASE("fiber product examples") {
    const ModulusPair n = mp("[inf]");
    for (int m = 1; m <= 3; ++m) {
        for (int k = 1; k <= 3; ++k) {
            auto a = mp("[x]" + mult(m) + " + [inf]");
            auto b = mp("[x - 1]" + mult(k) + " + [inf]");
            auto fp = canonical_fiber_product(morph(a, n, "x"), morph(b, n, "x"));
            REQUIRE(fp.pair.size() == 1);
            CHECK(fp.pair.divisor(0) == parse_divisor("[x]" + mult(m) + " + [x - 1]" + mult(k) + " + [inf]"));
            CHECK(fp.p1.admissible());
            CHECK(fp.p2.admissible());
        }
    }
    auto self = canonical_fiber_product(AdmissibleMorphism::identity(kBase), AdmissibleMorphism::identity(kBase));
    REQUIRE(self.pair.size() == 1);
    CHECK(self.pair.same_as(kBase));
    for (int c = 1; c <= 3; ++c) {
        for (int d = 1; d <= 3; ++d) {
            auto fp = canonical_fiber_product(morph(kummer_u(d), kBase, "x"), morph(kummer_v(c), kBase, "x^2"));
            REQUIRE(fp.pair.size() == 1);
            std::string expect = "[x]^2 + [inf]^2 + [x - 1]" + mult(d) + " + [x + 1]" + mult(std::max(c, d));
            CHECK(fp.pair.divisor(0) == parse_divisor(expect));
        }
    }
}

TEST_CASE("fiber product errors and empty case") {
    RationalMap c;
    c.parts.emplace_back(0, rf("2"));
    auto constant = AdmissibleMorphism::make(mp("[x]"), kBase, c);
    CHECK(error_kind([&] { canonical_fiber_product(constant, AdmissibleMorphism::identity(kBase)); }) ==
          ErrorKind::ConstantComponent);
    auto sq = morph(mp("[x - 1] + [x + 1]"), mp("[x - 1]"), "x^2");
    CHECK(error_kind([&] { canonical_fiber_product(sq, sq); }) == ErrorKind::NonSmoothFiberProduct);
    auto e = AdmissibleMorphism::make(ModulusPair::empty(), kBase, RationalMap{});
    CHECK(canonical_fiber_product(e, AdmissibleMorphism::identity(kBase)).pair.is_empty());
}

TEST_CASE("pullback square examples") {
    const ModulusPair n = mp("[inf]");
    auto a = mp("[x]^2 + [inf]");
    auto b = mp("[x - 1]^3 + [inf]");
    auto p = mp("[x]^2 + [x - 1]^3 + [inf]");
    MSquare t{morph(a, n, "x"), morph(b, n, "x"), morph(p, b, "x"), morph(p, a, "x")};
    CHECK(is_pullback_square(t).holds);
    auto big = mp("[x]^3 + [x - 1]^3 + [inf]");
    MSquare t2{morph(a, n, "x"), morph(b, n, "x"), morph(big, b, "x"), morph(big, a, "x")};
    CHECK_FALSE(is_pullback_square(t2).holds);
    auto id = AdmissibleMorphism::identity(kBase);
    CHECK(is_pullback_square(MSquare{id, id, id, id}).holds);
}

TEST_CASE("isomorphism search examples") {
    auto r1 = iso_modulus_pairs(mp("[x]^2 + [inf]^2"), mp("[x]^2 + [inf]^2"));
    CHECK(r1.found());
    auto r2 = iso_modulus_pairs(mp("[x] + [inf]"), mp("[x - 1] + [x + 1]"));
    REQUIRE(r2.found());
    CHECK(is_isomorphism(r2.map, mp("[x] + [inf]"), mp("[x - 1] + [x + 1]")));
    auto r3 = iso_modulus_pairs(mp("[x]"), mp("[x]^2"));
    CHECK(r3.status == IsoStatus::ProvenNone);
    auto r4 = iso_modulus_pairs(mp("[x] + [x - 1] + [x - 3] + [inf]"), mp("[x] + [x - 1] + [x + 1] + [inf]"));
    CHECK(r4.status == IsoStatus::ProvenNone); // cross-ratio orbits differ
    auto r5 = iso_modulus_pairs(mp("[x] + [x - 1] + [x + 1] + [inf]"), mp("[x] + [x - 1] + [x - 1/2] + [inf]"));
    CHECK(r5.found());
    auto r6 = iso_modulus_pairs(mp("[x^2 + 1] + [x]"), mp("[x^2 + 1] + [inf]"));
    CHECK(r6.found());
    auto two = disjoint_union(mp("[x]"), mp("[x]^2")).pair;
    auto owt = disjoint_union(mp("[inf]^2"), mp("[x - 4]")).pair;
    auto r7 = iso_modulus_pairs(two, owt);
    REQUIRE(r7.found());
    CHECK(r7.map[0].target() == 1);
    auto r8 = iso_modulus_pairs(mp("[x]", {Place::infinity()}), mp("[x]"));
    CHECK(r8.status == IsoStatus::ProvenNone);
}

TEST_CASE("iso search over a base") {
    // (t -> t^2) and (t -> (-t)^2) over the base coordinate
    auto m = mp("[x]^2 + [inf]^2");
    RationalMap a = single_map("x^2");
    RationalMap b = single_map("x^2");
    IsoOptions o;
    o.over_source = &a;
    o.over_target = &b;
    auto r = iso_modulus_pairs(m, m, o);
    REQUIRE(r.found());
    CHECK(rf("x^2").compose(r.map[0].function()) == rf("x^2"));
    RationalMap c = single_map("x^3");
    o.over_target = &c;
    CHECK(iso_modulus_pairs(m, m, o).status == IsoStatus::ProvenNone);
}

TEST_CASE("universal property of the fiber product") {
    std::mt19937 rng(21);
    for (int c = 1; c <= 3; ++c) {
        for (int d = 1; d <= 3; ++d) {
            auto f1 = morph(kummer_u(d), kBase, "x");
            auto f2 = morph(kummer_v(c), kBase, "x^2");
            auto fp = canonical_fiber_product(f1, f2);
            CHECK(fp.pair.is_proper());
            for (int k = 0; k < 6; ++k) {
                RationalFunction s = random_map(rng);
                RationalFunction s2 = rf("x^2").compose(s);
                Divisor need = sup_divisor(pullback_divisor(s2, kummer_u(d).divisor(0)),
                                           pullback_divisor(s, kummer_v(c).divisor(0)));
                ModulusPair l = ModulusPair::single(need);
                auto g1 = AdmissibleMorphism::make(l, kummer_u(d), single_map(s2.to_string()));
                auto g2 = AdmissibleMorphism::make(l, kummer_v(c), single_map(s.to_string()));
                REQUIRE(g1.admissible());
                REQUIRE(g2.admissible());
                auto h = factor_through(fp, g1, g2);
                INFO(s.to_string());
                CHECK(h.admissible());
                CHECK(fp.p1.after(h).map == g1.map);
                CHECK(fp.p2.after(h).map == g2.map);
            }
        }
    }
}

TEST_CASE("minimal leg collapses the fiber product") {
    const ModulusPair n = mp("[inf]");
    auto f1 = morph(mp("[inf]"), n, "x");
    REQUIRE(f1.minimal());
    for (const char* d : {"[x - 1]^2 + [inf]", "[x]^3 + [x^2 + 2] + [inf]^4"}) {
        auto m2 = mp(d);
        auto fp = canonical_fiber_product(f1, morph(m2, n, "x"));
        REQUIRE(fp.pair.size() == 1);
        CHECK(fp.pair.divisor(0) == pullback_divisor(fp.p2.map, m2.modulus)[0]);
        CHECK(fp.p2.minimal());
    }
}

TEST_CASE("admissible morphisms compose") {
    std::mt19937 rng(22);
    for (int k = 0; k < 60; ++k) {
        RationalFunction f = random_map(rng);
        RationalFunction g = random_map(rng);
        ModulusPair c = mp("[x] + [inf]");
        ModulusPair b = ModulusPair::single(pullback_divisor(g, c.divisor(0)) + parse_divisor("[x - 7]"));
        ModulusPair a = ModulusPair::single(pullback_divisor(f, b.divisor(0)));
        auto fa = morph(a, b, f.to_string());
        auto gb = morph(b, c, g.to_string());
        REQUIRE(fa.admissible());
        REQUIRE(gb.admissible());
        CHECK(gb.after(fa).admissible());
    }
}
