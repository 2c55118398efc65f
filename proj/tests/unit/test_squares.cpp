#include "mvtop/squares/mv.hpp"
#include "mvtop/squares/sheaf.hpp"
#include "support.hpp"

using namespace mvtop;

namespace {

RationalFunction rf(const std::string& s) { return parse_rational_function(s); }
ModulusPair mp(const std::string& d, std::set<Place> del = {}) {
    return ModulusPair::single(parse_divisor(d), std::move(del));
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

const ModulusPair kGm = mp("[x] + [inf]");
const Place kOne = Place::rational(1);
const Place kMinusOne = Place::rational(-1);

BuiltSquare kummer(int c, int d) { return build_nisnevich_mv_square(kGm, {kOne}, rf("x^2"), {kMinusOne}, c, d); }
BuiltSquare zariski(int c, int d) {
    return build_zariski_square(mp("[inf]"), {Place::rational(0)}, {kOne}, c, d);
}

} // namespace

TEST_CASE("Kummer square corners") {
    for (int c = 1; c <= 3; ++c) {
        for (int d = 1; d <= 3; ++d) {
            BuiltSquare b = kummer(c, d);
            CHECK(b.t.t10().divisor(0) == parse_divisor("[x] + [inf] + [x - 1]" + mult(d)));
            CHECK(b.t.t01().divisor(0) == parse_divisor("[x]^2 + [inf]^2 + [x + 1]" + mult(c)));
            CHECK(b.t.t00().divisor(0) ==
                  parse_divisor("[x]^2 + [inf]^2 + [x - 1]" + mult(d) + " + [x + 1]" + mult(std::max(c, d))));
            CHECK(b.t.commutes());
        }
    }
}

TEST_CASE("elementary Nisnevich witness examples") {
    BuiltSquare b = kummer(2, 1);
    REQUIRE(b.w);
    CHECK(check_ulmv_square(b.w->s).holds);
    CHECK(b.w->s.t01().deleted(0) == std::set<Place>{Place::rational(0), Place::infinity(), kMinusOne});

    // keep -1 in S01: the fiber over 1 has two points
    ModulusPair s10 = mp("[x] + [inf]", {kOne});
    ModulusPair s01 = mp("0", {Place::rational(0), Place::infinity()});
    auto u = AdmissibleMorphism::make(s10, kGm, RationalMap::identity(1));
    auto p = morph(s01, kGm, "x^2");
    auto fp = canonical_fiber_product(u, p);
    CHECK_FALSE(check_ulmv_square(MSquare{u, p, fp.p2, fp.p1}).holds);

    auto id = AdmissibleMorphism::identity(kGm);
    CHECK(check_ulmv_square(MSquare{id, id, id, id}).holds);
    CHECK(error_kind([] { build_nisnevich_mv_square(kGm, {kOne}, rf("x^2"), {}, 1, 1); }) == ErrorKind::NotNisnevich);
}

TEST_CASE("MV discrimination on the Kummer family") {
    for (int c = 1; c <= 3; ++c) {
        for (int d = 1; d <= 3; ++d) {
            INFO("c=" << c << " d=" << d);
            BuiltSquare b = kummer(c, d);
            MvReport r = is_mv_square(b.t, &*b.w);
            CHECK(r.cond1 == Verdict::True);
            CHECK(r.cond2 == Verdict::True);
            CHECK(r.cond3 == (d <= c ? Verdict::True : Verdict::False));
            CHECK(r.verdict == (d <= c ? Verdict::True : Verdict::False));
        }
    }
    MvReport none = is_mv_square(kummer(2, 1).t);
    CHECK(none.cond2 == Verdict::Unknown);
    CHECK(none.verdict == Verdict::Unknown);
}

TEST_CASE("Zariski squares are MV") {
    for (int c = 1; c <= 3; ++c) {
        for (int d = 1; d <= 3; ++d) {
            BuiltSquare b = zariski(c, d);
            MvReport r = is_mv_square(b.t, &*b.w);
            CHECK(r.verdict == Verdict::True);
            REQUIRE(r.od_map);
            CHECK(r.od_map->source.is_empty());
            CHECK(r.od_map->target.is_empty());
        }
    }
    BuiltSquare deg = build_zariski_square(kGm, {}, {kOne}, 1, 1);
    CHECK(is_mv_square(deg.t, &*deg.w).verdict == Verdict::True);
    CHECK(deg.t.t00().same_as(deg.t.t01()));
}

TEST_CASE("base change keeps MV squares") {
    BuiltSquare k = kummer(2, 1);
    auto open = morph(mp("[x] + [inf] + [x - 3]"), kGm, "x");
    BuiltSquare kb = base_change_square(k.t, open, &*k.w);
    CHECK(is_mv_square(kb.t, &*kb.w).verdict == Verdict::True);

    BuiltSquare z = build_zariski_square(kGm, {Place::rational(2)}, {Place::rational(3)}, 1, 2);
    auto cover = morph(mp("[x]^2 + [inf]^2"), kGm, "x^2");
    BuiltSquare zb = base_change_square(z.t, cover, &*z.w);
    CHECK(is_mv_square(zb.t, &*zb.w).verdict == Verdict::True);

    BuiltSquare same = base_change_square(k.t, AdmissibleMorphism::identity(kGm), &*k.w);
    CHECK(same.t.t00().same_as(k.t.t00()));
    CHECK(is_mv_square(same.t, &*same.w).verdict == Verdict::True);
}

TEST_CASE("derived squares") {
    for (auto b : {kummer(2, 1), kummer(3, 3), zariski(1, 2)}) {
        CHECK(is_interior_open_immersion(b.t.u.map));
        BuiltSquare d = derived_square(b.t);
        MvReport r = is_mv_square(d.t, &*d.w);
        INFO(r.detail1 << " | " << r.detail2 << " | " << r.detail3);
        CHECK(r.verdict == Verdict::True);
    }
    BuiltSquare z = derived_square(zariski(1, 1).t);
    CHECK(z.t.t10().size() == 1);
    CHECK(error_kind([] { derived_square(kummer(1, 2).t); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("gluing along MV squares") {
    BuiltSquare k = kummer(2, 1);
    // f, g pulled back from T11 -> L
    ModulusPair l = mp("[inf]");
    for (const char* hs : {"x", "1/x", "x + 1/x", "2x - 3 + 5/x", "7"}) {
        INFO(hs);
        RationalMap h = single_map(hs);
        auto f = AdmissibleMorphism::make(k.t.t10(), l, h.compose(k.t.u.map));
        auto g = AdmissibleMorphism::make(k.t.t01(), l, h.compose(k.t.p.map));
        REQUIRE(f.admissible());
        REQUIRE(g.admissible());
        auto glued = glue_cocartesian(k.t, f, g);
        CHECK(glued.map == h);
    }
    // Zariski: f and g disagreeing
    BuiltSquare z = zariski(1, 1);
    auto f = morph(z.t.t10(), mp("[inf]"), "x");
    auto g = morph(z.t.t01(), mp("[inf]"), "x + 1");
    CHECK(error_kind([&] { glue_cocartesian(z.t, f, g); }) == ErrorKind::InconsistentInput);
}

TEST_CASE("finite presheaf sheaf check") {
    PresheafTable constant{1, 3, 3, 3, 3, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    CHECK(sheaf_check_finite_presheaf(constant).holds);
    PresheafTable strict{1, 2, 2, 2, 1, {0}, {0}, {0, 1}, {0, 1}};
    CHECK_FALSE(sheaf_check_finite_presheaf(strict).holds);
    PresheafTable no_point = constant;
    no_point.empty_size = 0;
    CHECK_FALSE(sheaf_check_finite_presheaf(no_point).holds);
    PresheafTable bad{1, 2, 2, 2, 1, {0}, {1}, {0, 1}, {0, 1}};
    CHECK(error_kind([&] { sheaf_check_finite_presheaf(bad); }) == ErrorKind::MalformedTable);
    PresheafTable range{1, 1, 1, 1, 1, {3}, {0}, {0}, {0}};
    CHECK(error_kind([&] { sheaf_check_finite_presheaf(range); }) == ErrorKind::MalformedTable);

    BuiltSquare z = zariski(1, 1);
    PresheafTable rep = representable_table(z.t, mp("[inf]"), 2);
    CHECK(rep.f11 > 0);
    CHECK(rep.f10 > rep.f11);
    CHECK(sheaf_check_finite_presheaf(rep).holds);
}
