#include "mvtop/squares/mv.hpp"

#include "mvtop/error.hpp"

namespace mvtop {

namespace {

RationalMap single(const RationalFunction& f) {
    RationalMap m;
    m.parts.emplace_back(0, f);
    return m;
}

Divisor points(const std::set<Place>& s, int k) {
    Divisor d;
    if (k > 0) {
        for (const auto& p : s) {
            d.add(p, k);
        }
    }
    return d;
}

// pair with every boundary place deleted and zero modulus
ModulusPair interior_of(const ModulusPair& m) {
    ModulusPair out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        out.ambient.components.push_back({m.ambient.components[i].label, m.boundary(i)});
        out.modulus.emplace_back();
    }
    return out;
}

// f + g on a disjoint union, shifting g's targets by `offset`
RationalMap sum_map(const RationalMap& f, const RationalMap& g, int offset) {
    RationalMap out = f;
    for (const auto& part : g.parts) {
        out.parts.emplace_back(part.target() + offset, part.function());
    }
    return out;
}

Verdict from(bool b) { return b ? Verdict::True : Verdict::False; }

} // namespace

BuiltSquare build_nisnevich_mv_square(const ModulusPair& m, const std::set<Place>& z, const RationalFunction& cover,
                                      const std::set<Place>& e, int c, int d) {
    if (m.size() != 1 || !m.is_proper()) {
        fail(ErrorKind::InvalidArgument, "square builder needs a proper one-component pair");
    }
    if (cover.is_constant()) {
        fail(ErrorKind::ConstantComponent, "constant cover");
    }
    if ((c < 1 && !e.empty()) || (d < 1 && !z.empty())) {
        fail(ErrorKind::InvalidArgument, "extra multiplicities must be positive on removed places");
    }
    for (const auto& p : z) {
        if (!m.in_interior(0, p)) {
            fail(ErrorKind::InvalidArgument, "removed place " + p.to_string() + " is not interior");
        }
    }
    const Divisor& base = m.divisor(0);
    Divisor pulled = pullback_divisor(cover, base);
    for (const auto& p : e) {
        if (pulled.contains(p)) {
            fail(ErrorKind::InvalidArgument, "extra place " + p.to_string() + " is on the boundary");
        }
    }
    BuiltSquare out;
    ModulusPair t10 = ModulusPair::single(base + points(z, d));
    ModulusPair t01 = ModulusPair::single(pulled + points(e, c));
    AdmissibleMorphism u_t = AdmissibleMorphism::make(t10, m, RationalMap::identity(1));
    AdmissibleMorphism p_t = AdmissibleMorphism::make(t01, m, single(cover));
    FiberProduct fp_t = canonical_fiber_product(u_t, p_t);
    out.t = MSquare{u_t, p_t, fp_t.p2, fp_t.p1};

    std::set<Place> del01 = e;
    for (const auto& p : ramification_divisor(cover).support()) {
        del01.insert(p);
    }
    ModulusPair s10 = ModulusPair::single(base, z);
    ModulusPair s01 = ModulusPair::single(pulled.without(del01), del01);
    AdmissibleMorphism u_s = AdmissibleMorphism::make(s10, m, RationalMap::identity(1));
    AdmissibleMorphism p_s = AdmissibleMorphism::make(s01, m, single(cover));
    FiberProduct fp_s = canonical_fiber_product(u_s, p_s);
    WitnessData w{MSquare{u_s, p_s, fp_s.p2, fp_s.p1}, {}, {}, {}, {}};
    w.c11 = AdmissibleMorphism::identity(m);
    w.c10 = AdmissibleMorphism::make(s10, t10, RationalMap::identity(1));
    w.c01 = AdmissibleMorphism::make(s01, t01, RationalMap::identity(1));
    w.c00 = factor_through(fp_t, w.c10.after(w.s.q), w.c01.after(w.s.v));
    CheckReport ul = check_ulmv_square(w.s);
    if (!ul.holds) {
        fail(ErrorKind::NotNisnevich, "witness square is not elementary Nisnevich: " + ul.detail);
    }
    out.w = std::move(w);
    return out;
}

BuiltSquare build_zariski_square(const ModulusPair& m, const std::set<Place>& z, const std::set<Place>& e, int c,
                                 int d) {
    for (const auto& p : z) {
        if (e.count(p) != 0) {
            fail(ErrorKind::NotNisnevich, "opens do not cover: " + p.to_string() + " removed twice");
        }
    }
    return build_nisnevich_mv_square(m, z, RationalFunction::identity(), e, c, d);
}

MvReport is_mv_square(const MSquare& t, const WitnessData* w) {
    if (!t.all_proper()) {
        fail(ErrorKind::InvalidArgument, "MV test needs proper corners");
    }
    MvReport r;
    PullbackReport pb = is_pullback_square(t);
    r.cond1 = from(pb.holds);
    r.detail1 = pb.detail;
    r.comparison = pb.comparison;

    if (w == nullptr) {
        r.detail2 = "no witness supplied";
    } else {
        CheckReport wc = check_witness(t, *w);
        r.cond2 = wc.holds ? Verdict::True : Verdict::Unknown;
        r.detail2 = wc.holds ? "" : "witness rejected: " + wc.detail;
    }

    try {
        AdmissibleMorphism m = od_morphism(t.q, t.p, t.v, t.u);
        r.cond3 = from(is_isomorphism(m.map, m.source, m.target));
        if (r.cond3 == Verdict::False) {
            r.detail3 = "OD(q) = " + m.source.to_string() + " vs OD(p) = " + m.target.to_string();
        }
        r.od_map = std::move(m);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotEtale && e.kind() != ErrorKind::NotOpenImmersion &&
            e.kind() != ErrorKind::InconsistentInput && e.kind() != ErrorKind::InteriorViolation) {
            throw;
        }
        r.cond3 = Verdict::False;
        r.detail3 = e.what();
    }

    if (r.cond1 == Verdict::False || r.cond3 == Verdict::False) {
        r.verdict = Verdict::False;
    } else if (r.cond2 == Verdict::True) {
        r.verdict = Verdict::True;
    }
    return r;
}

AdmissibleMorphism inverse_isomorphism(const AdmissibleMorphism& f) {
    if (!is_isomorphism(f.map, f.source, f.target)) {
        fail(ErrorKind::InvalidArgument, "inverse of a non-isomorphism");
    }
    RationalMap inv;
    inv.parts.resize(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) {
        auto j = static_cast<std::size_t>(f.map[i].target());
        inv.parts[j] = ComponentMap(static_cast<int>(i), f.map[i].function().mobius_inverse());
    }
    return AdmissibleMorphism::make(f.target, f.source, inv);
}

BuiltSquare base_change_square(const MSquare& t, const AdmissibleMorphism& h, const WitnessData* w) {
    const ModulusPair& l = h.source;
    auto change = [](const MSquare& sq, const AdmissibleMorphism& hh) {
        FiberProduct f10 = canonical_fiber_product(sq.u, hh);
        FiberProduct f01 = canonical_fiber_product(sq.p, hh);
        FiberProduct f00 = canonical_fiber_product(sq.u.after(sq.q), hh);
        AdmissibleMorphism q2 = factor_through(f10, sq.q.after(f00.p1), f00.p2);
        AdmissibleMorphism v2 = factor_through(f01, sq.v.after(f00.p1), f00.p2);
        return std::make_tuple(MSquare{f10.p2, f01.p2, v2, q2}, f00, f01, f10);
    };
    auto [tb, t00, t01, t10] = change(t, h);
    BuiltSquare out{tb, std::nullopt};
    if (w == nullptr) {
        return out;
    }
    AdmissibleMorphism hs = inverse_isomorphism(w->c11).after(h);
    auto [sb, s00, s01, s10] = change(w->s, hs);
    WitnessData wb{sb, {}, {}, {}, {}};
    wb.c11 = AdmissibleMorphism::identity(l);
    wb.c10 = factor_through(t10, w->c10.after(s10.p1), s10.p2);
    wb.c01 = factor_through(t01, w->c01.after(s01.p1), s01.p2);
    wb.c00 = factor_through(t00, w->c00.after(s00.p1), s00.p2);
    out.w = std::move(wb);
    return out;
}

BuiltSquare derived_square(const MSquare& t) {
    OffDiagonal odq = off_diagonal(t.q);
    OffDiagonal odp = off_diagonal(t.p);
    AdmissibleMorphism od_map = od_morphism(t.q, t.p, t.v, t.u);
    if (!is_isomorphism(od_map.map, od_map.source, od_map.target)) {
        fail(ErrorKind::InvalidArgument, "derived square needs OD(q) -> OD(p) to be an isomorphism");
    }
    const FiberProduct& d10 = odq.square;
    const FiberProduct& d11 = odp.square;
    const ModulusPair& t00 = t.t00();
    const ModulusPair& t01 = t.t01();
    AdmissibleMorphism id00 = AdmissibleMorphism::identity(t00);
    AdmissibleMorphism id01 = AdmissibleMorphism::identity(t01);
    AdmissibleMorphism q_d = factor_through(d10, id00, id00);
    AdmissibleMorphism p_d = factor_through(d11, id01, id01);
    AdmissibleMorphism u_d = factor_through(d11, t.v.after(d10.p1), t.v.after(d10.p2));
    BuiltSquare out{MSquare{u_d, p_d, t.v, q_d}, std::nullopt};

    // witness: S10 = T00 interior + OD(p) sitting openly in D11, S01 = T01 on the diagonal
    ModulusPair inner = interior_of(t00);
    DisjointUnion s10 = disjoint_union(inner, odp.pair);
    auto off00 = static_cast<int>(t01.size());
    RationalMap to_sum = sum_map(t.v.map, RationalMap::identity(odp.pair.size()), off00);
    AdmissibleMorphism u_s = AdmissibleMorphism::make(s10.pair, d11.pair, odp.decomposition.map.compose(to_sum));
    const AdmissibleMorphism& p_s = p_d;
    FiberProduct fp_s = canonical_fiber_product(u_s, p_s);
    WitnessData w{MSquare{u_s, p_s, fp_s.p2, fp_s.p1}, {}, {}, {}, {}};
    w.c11 = AdmissibleMorphism::identity(d11.pair);
    w.c01 = id01;
    AdmissibleMorphism od_inv = inverse_isomorphism(od_map);
    RationalMap back = sum_map(RationalMap::identity(t00.size()), od_inv.map, static_cast<int>(t00.size()));
    w.c10 = AdmissibleMorphism::make(s10.pair, d10.pair, odq.decomposition.map.compose(back));
    RationalMap c00;
    for (const auto& part : fp_s.p1.map.parts) {
        if (static_cast<std::size_t>(part.target()) >= t00.size()) {
            fail(ErrorKind::InconsistentInput, "derived witness meets the off-diagonal part");
        }
        c00.parts.push_back(part);
    }
    w.c00 = AdmissibleMorphism::make(fp_s.pair, t00, c00);
    out.w = std::move(w);
    return out;
}

AdmissibleMorphism glue_cocartesian(const MSquare& t, const AdmissibleMorphism& f, const AdmissibleMorphism& g) {
    if (!f.source.same_as(t.t10()) || !g.source.same_as(t.t01()) || !f.target.same_as(g.target)) {
        fail(ErrorKind::InvalidArgument, "glue data does not match the square");
    }
    if (f.map.compose(t.q.map) != g.map.compose(t.v.map)) {
        fail(ErrorKind::InconsistentInput, "f and g disagree on T00");
    }
    const ModulusPair& t11 = t.t11();
    RationalMap h;
    h.parts.resize(t11.size());
    std::vector<bool> done(t11.size(), false);
    auto place = [&](const AdmissibleMorphism& leg, const AdmissibleMorphism& fn) {
        for (std::size_t i = 0; i < leg.map.size(); ++i) {
            auto k = static_cast<std::size_t>(leg.map[i].target());
            if (done[k] || !leg.map[i].function().is_mobius()) {
                continue;
            }
            RationalMap inv;
            inv.parts.emplace_back(static_cast<int>(i), leg.map[i].function().mobius_inverse());
            h.parts[k] = fn.map.compose(inv).parts[0];
            done[k] = true;
        }
    };
    place(t.u, f);
    place(t.p, g);
    for (std::size_t k = 0; k < t11.size(); ++k) {
        if (!done[k]) {
            fail(ErrorKind::InconsistentInput, "component " + std::to_string(k) + " of T11 is not covered openly");
        }
    }
    if (h.compose(t.u.map) != f.map || h.compose(t.p.map) != g.map) {
        fail(ErrorKind::InconsistentInput, "glued map does not restrict to f and g");
    }
    AdmissibleMorphism out;
    try {
        out = AdmissibleMorphism::make(t11, f.target, h);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InteriorViolation && e.kind() != ErrorKind::NonProperSource) {
            throw;
        }
        fail(ErrorKind::GlueInadmissible, e.what());
    }
    if (!out.admissible()) {
        fail(ErrorKind::GlueInadmissible, "glued map is not admissible: " + out.flags.detail);
    }
    return out;
}

} // namespace mvtop
