#include "mvtop/squares/witness.hpp"

#include "mvtop/error.hpp"

namespace mvtop {

namespace {

std::set<Place> image_of(const RationalFunction& f, const std::set<Place>& s) {
    std::set<Place> out;
    for (const auto& p : s) {
        out.insert(f.image(p));
    }
    return out;
}

CheckReport no(std::string why) { return {false, std::move(why)}; }

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

CheckReport check_ulmv_square(const MSquare& s) {
    if (!s.commutes()) {
        return no("square does not commute");
    }
    if (!s.all_admissible() || !s.all_minimal()) {
        return no("an edge is not minimal");
    }
    if (!is_interior_open_immersion(s.u.map)) {
        return no("u is not an open immersion");
    }
    const ModulusPair& s00 = s.t00();
    const ModulusPair& s01 = s.t01();
    const ModulusPair& s10 = s.t10();
    const ModulusPair& s11 = s.t11();
    for (std::size_t j = 0; j < s01.size(); ++j) {
        if (s.p.map[j].is_constant()) {
            return no("p is constant on a component");
        }
        Divisor r = ramification_divisor(s.p.map[j].function());
        for (const auto& [pl, k] : r.terms()) {
            if (s01.deleted(j).count(pl) == 0) {
                return no("p ramifies at " + pl.to_string() + " on component " + std::to_string(j));
            }
        }
    }
    // closed complement Z of u, per component of S11
    std::vector<bool> whole(s11.size(), true);
    std::vector<std::set<Place>> z(s11.size());
    for (std::size_t i = 0; i < s10.size(); ++i) {
        auto k = static_cast<std::size_t>(s.u.map[i].target());
        whole[k] = false;
        for (const auto& pl : image_of(s.u.map[i].function(), s10.deleted(i))) {
            if (s11.deleted(k).count(pl) == 0) {
                z[k].insert(pl);
            }
        }
    }
    // cartesian: v identifies S00 with S01 minus the preimage of Z
    if (!is_interior_open_immersion(s.v.map)) {
        return no("v is not an open immersion");
    }
    std::vector<int> v_source(s01.size(), -1);
    for (std::size_t i = 0; i < s00.size(); ++i) {
        v_source[static_cast<std::size_t>(s.v.map[i].target())] = static_cast<int>(i);
    }
    for (std::size_t j = 0; j < s01.size(); ++j) {
        auto k = static_cast<std::size_t>(s.p.map[j].target());
        if (whole[k]) {
            if (v_source[j] >= 0) {
                return no("component " + std::to_string(j) + " of S01 over the complement is hit by v");
            }
            continue;
        }
        if (v_source[j] < 0) {
            return no("component " + std::to_string(j) + " of S01 is missing from S00");
        }
        std::set<Place> expect = s01.deleted(j);
        for (const auto& q : z[k]) {
            for (const auto& [pl, e] : s.p.map[j].function().preimage(q)) {
                expect.insert(pl);
            }
        }
        auto i = static_cast<std::size_t>(v_source[j]);
        if (image_of(s.v.map[i].function(), s00.deleted(i)) != expect) {
            return no("S00 is not the fiber product over component " + std::to_string(j));
        }
    }
    // reduced complements
    for (std::size_t k = 0; k < s11.size(); ++k) {
        std::vector<std::size_t> over;
        for (std::size_t j = 0; j < s01.size(); ++j) {
            if (static_cast<std::size_t>(s.p.map[j].target()) == k) {
                over.push_back(j);
            }
        }
        if (whole[k]) {
            if (over.size() != 1 || !s.p.map[over[0]].function().is_mobius() ||
                image_of(s.p.map[over[0]].function(), s01.deleted(over[0])) != s11.deleted(k)) {
                return no("complement component " + std::to_string(k) + " is not covered isomorphically");
            }
            continue;
        }
        for (const auto& q : z[k]) {
            int count = 0;
            bool degree_ok = true;
            for (auto j : over) {
                for (const auto& [pl, e] : s.p.map[j].function().preimage(q)) {
                    if (s01.deleted(j).count(pl) == 0) {
                        ++count;
                        degree_ok = degree_ok && pl.degree() == q.degree();
                    }
                }
            }
            if (count != 1 || !degree_ok) {
                return no("complement over " + q.to_string() + " has " + std::to_string(count) +
                          " places (need exactly one of equal degree)");
            }
        }
    }
    return {true, ""};
}

bool is_interior_isomorphism(const AdmissibleMorphism& c) {
    if (!c.admissible() || !is_interior_open_immersion(c.map) || c.source.size() != c.target.size()) {
        return false;
    }
    for (std::size_t i = 0; i < c.source.size(); ++i) {
        auto j = static_cast<std::size_t>(c.map[i].target());
        if (image_of(c.map[i].function(), c.source.boundary(i)) != c.target.boundary(j)) {
            return false;
        }
    }
    return true;
}

CheckReport check_witness(const MSquare& t, const WitnessData& w) {
    CheckReport ul = check_ulmv_square(w.s);
    if (!ul.holds) {
        return no("witness is not an elementary Nisnevich square: " + ul.detail);
    }
    if (!is_isomorphism(w.c11.map, w.c11.source, w.c11.target) || !w.c11.target.same_as(t.t11())) {
        return no("S(11) -> T(11) is not an isomorphism");
    }
    const std::array<std::pair<const AdmissibleMorphism*, const ModulusPair*>, 4> corners{
        {{&w.c00, &t.t00()}, {&w.c01, &t.t01()}, {&w.c10, &t.t10()}, {&w.c11, &t.t11()}}};
    const char* names[] = {"00", "01", "10", "11"};
    const ModulusPair* sources[] = {&w.s.t00(), &w.s.t01(), &w.s.t10(), &w.s.t11()};
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& [c, corner] = corners[k];
        if (!c->source.same_as(*sources[k]) || !c->target.same_as(*corner)) {
            return no(std::string("connecting map at corner ") + names[k] + " has the wrong ends");
        }
        if (!is_interior_isomorphism(*c)) {
            return no(std::string("interior of corner ") + names[k] + " is not preserved");
        }
    }
    if (w.c11.map.compose(w.s.u.map) != t.u.map.compose(w.c10.map) ||
        w.c11.map.compose(w.s.p.map) != t.p.map.compose(w.c01.map) ||
        w.c01.map.compose(w.s.v.map) != t.v.map.compose(w.c00.map) ||
        w.c10.map.compose(w.s.q.map) != t.q.map.compose(w.c00.map)) {
        return no("connecting maps do not commute with the edges");
    }
    return {true, ""};
}

} // namespace mvtop
