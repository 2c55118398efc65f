#include "mvtop/offdiag/off_diagonal.hpp"
#include "support.hpp"

using namespace mvtop;

namespace {

RationalFunction rf(const std::string& s) { return parse_rational_function(s); }
ModulusPair mp(const std::string& d) { return ModulusPair::single(parse_divisor(d)); }
AdmissibleMorphism morph(const ModulusPair& a, const ModulusPair& b, const std::string& f) {
    RationalMap m;
    m.parts.emplace_back(0, rf(f));
    return AdmissibleMorphism::make(a, b, m);
}

const ModulusPair kGm = mp("[x] + [inf]");

struct Cover {
    std::string name;
    AdmissibleMorphism f;
};

std::vector<Cover> covers() {
    ModulusPair twisted_base = mp("[x - 1] + [x + 1]");
    // (x - 1)/(x + 1) sends {1, -1} to {0, inf}; its square is an etale cover away from them
    return {
        {"x^2 minimal", morph(mp("[x]^2 + [inf]^2"), kGm, "x^2")},
        {"x^2 non-minimal", morph(mp("[x]^3 + [inf]^2 + [x - 5]"), kGm, "x^2")},
        {"x + 1/x", morph(mp("[x] + [inf] + [x - 1]^2 + [x + 1]^2"), mp("[inf] + [x - 2] + [x + 2]"), "x + 1/x")},
        {"twisted x^2", morph(mp("[x - 1]^2 + [x + 1]^2"), kGm, "((x - 1)/(x + 1))^2")},
        {"twisted base", morph(mp("[x]^2 + [inf]^2"), twisted_base, "(1 + x^2)/(1 - x^2)")},
    };
}

} // namespace

TEST_CASE("interior etale examples") {
    CHECK(is_interior_etale(morph(mp("[x]^2 + [inf]^2"), kGm, "x^2")));
    CHECK_FALSE(is_interior_etale(morph(mp("[inf]^2"), mp("[inf]"), "x^2")));
    CHECK(is_interior_etale(morph(mp("[x] + [inf] + [x - 1]"), kGm, "x")));
    CHECK(is_interior_etale(morph(kGm, kGm, "1/x")));
    RationalMap c;
    c.parts.emplace_back(0, rf("2"));
    CHECK(error_kind([&] { is_interior_etale(AdmissibleMorphism::make(kGm, kGm, c)); }) ==
          ErrorKind::ConstantComponent);
}

TEST_CASE("off-diagonal examples") {
    auto od = off_diagonal(morph(mp("[x]^2 + [inf]^2"), kGm, "x^2"));
    REQUIRE(od.pair.size() == 1);
    CHECK(od.pair.divisor(0) == parse_divisor("[x]^2 + [inf]^2"));
    CHECK(od.pr1.map[0].function().is_identity());
    CHECK(od.pr2.map[0].function() == rf("-x"));

    auto imm = off_diagonal(morph(mp("[x] + [inf] + [x - 1]"), kGm, "x"));
    CHECK(imm.pair.is_empty());

    auto j = off_diagonal(morph(mp("[x] + [inf] + [x - 1]^2 + [x + 1]^2"), mp("[inf] + [x - 2] + [x + 2]"), "x + 1/x"));
    REQUIRE(j.pair.size() == 1);
    CHECK(j.square.components[j.rest[0]].equation == parse_poly("x*y - 1"));
    CHECK(j.pr2.map[0].function() == rf("1/x"));

    CHECK(error_kind([] { off_diagonal(morph(mp("[inf]^2"), mp("[inf]"), "x^2")); }) == ErrorKind::NotEtale);
}

TEST_CASE("decomposition and interior formula") {
    for (const auto& c : covers()) {
        INFO(c.name);
        REQUIRE(c.f.admissible());
        OffDiagonal od = off_diagonal(c.f);
        DisjointUnion du = disjoint_union(c.f.source, od.pair);
        CHECK(is_isomorphism(od.decomposition.map, du.pair, od.square.pair));
        CHECK(iso_modulus_pairs(od.square.pair, du.pair).found());
        CHECK_FALSE(od.pair.is_empty());
        for (std::size_t k = 0; k < od.pair.size(); ++k) {
            // boundary = preimage of the source boundary under either projection
            std::set<Place> expect;
            for (const auto* pr : {&od.pr1, &od.pr2}) {
                const ComponentMap& m = pr->map[k];
                for (const auto& q : c.f.source.boundary(static_cast<std::size_t>(m.target()))) {
                    for (const auto& [p, e] : m.function().preimage(q)) {
                        expect.insert(p);
                    }
                }
            }
            CHECK(od.pair.boundary(k) == expect);
        }
        if (c.f.minimal()) {
            AdmissibleMorphism pi = c.f.after(od.pr1);
            CHECK(od.pair.modulus == pi.flags.pullback);
        }
    }
}

TEST_CASE("off-diagonal functoriality") {
    auto f = morph(mp("[x]^2 + [inf]^2"), kGm, "x^2");
    auto id_u = AdmissibleMorphism::identity(f.source);
    auto id_n = AdmissibleMorphism::identity(kGm);
    auto self = od_morphism(f, f, id_u, id_n);
    CHECK(self.map.is_identity());

    auto n1 = mp("[x] + [inf] + [x - 1]");
    auto u1 = mp("[x]^2 + [inf]^2 + [x - 1] + [x + 1]");
    auto f1 = morph(u1, n1, "x^2");
    auto a = morph(u1, f.source, "x");
    auto b = morph(n1, kGm, "x");
    auto m = od_morphism(f1, f, a, b);
    CHECK(m.admissible());
    CHECK(m.map.is_identity());
    CHECK(off_diagonal(f1).pair.divisor(0) == parse_divisor("[x]^2 + [inf]^2 + [x - 1] + [x + 1]"));

    // identity of G_m into the two-sheeted trivial cover, through the first sheet
    DisjointUnion two = disjoint_union(kGm, kGm);
    RationalMap fold;
    fold.parts.emplace_back(0, RationalFunction::identity());
    fold.parts.emplace_back(0, RationalFunction::identity());
    auto f2 = AdmissibleMorphism::make(two.pair, kGm, fold);
    auto into = od_morphism(id_n, f2, two.first, id_n);
    CHECK(into.source.is_empty());
    CHECK(off_diagonal(f2).pair.size() == 2);

    CHECK(error_kind([&] { od_morphism(f, f, morph(f.source, f.source, "x^3"), id_n); }) ==
          ErrorKind::NotOpenImmersion);
}

TEST_CASE("off-diagonal base change") {
    auto f = morph(mp("[x]^2 + [inf]^2"), kGm, "x^2");
    CHECK(od_base_change_check(f, AdmissibleMorphism::identity(kGm)).holds);
    CHECK(od_base_change_check(f, morph(mp("[x] + [inf] + [x - 1]"), kGm, "x")).holds);
    CHECK(od_base_change_check(f, f).holds);
    for (const auto& c : covers()) {
        INFO(c.name);
        CHECK(od_base_change_check(c.f, AdmissibleMorphism::identity(c.f.target)).holds);
    }
}
