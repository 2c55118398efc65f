#include "mvtop/offdiag/off_diagonal.hpp"

#include "mvtop/error.hpp"

namespace mvtop {

namespace {

bool vanishes_on_diagonal(const Poly& g) {
    return g.substitute(VY, Poly::var(VX)).is_zero();
}

RationalMap restrict_to(const RationalMap& m, const std::vector<std::size_t>& parts) {
    RationalMap out;
    for (auto k : parts) {
        out.parts.push_back(m[k]);
    }
    return out;
}

ModulusPair sub_pair(const ModulusPair& m, const std::vector<std::size_t>& parts) {
    ModulusPair out;
    for (auto k : parts) {
        out.ambient.components.push_back(m.ambient.components[k]);
        out.modulus.push_back(m.modulus[k]);
    }
    return out;
}

} // namespace

bool is_interior_etale(const AdmissibleMorphism& f) {
    for (std::size_t i = 0; i < f.map.size(); ++i) {
        if (f.map[i].is_constant()) {
            fail(ErrorKind::ConstantComponent, "constant component in an etale test");
        }
        Divisor r = ramification_divisor(f.map[i].function());
        for (const auto& [p, k] : r.terms()) {
            if (f.source.in_interior(i, p)) {
                return false;
            }
        }
    }
    return true;
}

OffDiagonal off_diagonal(const AdmissibleMorphism& f) {
    if (!is_interior_etale(f)) {
        fail(ErrorKind::NotEtale, "off-diagonal of a map ramified on the interior");
    }
    OffDiagonal od;
    od.square = canonical_fiber_product(f, f);
    const FiberProduct& fp = od.square;
    od.diagonal.assign(f.source.size(), fp.components.size());
    for (std::size_t c = 0; c < fp.components.size(); ++c) {
        const FiberComponent& fc = fp.components[c];
        if (fc.left == fc.right && vanishes_on_diagonal(fc.equation)) {
            if (od.diagonal[fc.left] != fp.components.size()) {
                fail(ErrorKind::InconsistentInput, "two diagonal components");
            }
            od.diagonal[fc.left] = c;
        } else {
            od.rest.push_back(c);
        }
    }
    for (std::size_t i = 0; i < od.diagonal.size(); ++i) {
        if (od.diagonal[i] == fp.components.size()) {
            fail(ErrorKind::InconsistentInput, "no diagonal component over source component " + std::to_string(i));
        }
    }
    od.pair = sub_pair(fp.pair, od.rest);
    od.pr1 = AdmissibleMorphism::make(od.pair, f.source, restrict_to(fp.p1.map, od.rest));
    od.pr2 = AdmissibleMorphism::make(od.pair, f.source, restrict_to(fp.p2.map, od.rest));

    DisjointUnion du = disjoint_union(f.source, od.pair);
    RationalMap dec;
    for (std::size_t i = 0; i < f.source.size(); ++i) {
        const Parametrization& pz = fp.components[od.diagonal[i]].param;
        auto back = [&](const Poly& p) { return p.substitute(VY, Poly::var(VX)).to_uni(VX); };
        dec.parts.emplace_back(static_cast<int>(od.diagonal[i]),
                               RationalFunction(back(pz.inverse_num), back(pz.inverse_den)));
    }
    for (auto c : od.rest) {
        dec.parts.emplace_back(static_cast<int>(c), RationalFunction::identity());
    }
    od.decomposition = AdmissibleMorphism::make(du.pair, fp.pair, dec);
    if (!is_isomorphism(dec, du.pair, fp.pair)) {
        fail(ErrorKind::InconsistentInput, "diagonal decomposition is not an isomorphism");
    }
    return od;
}

AdmissibleMorphism od_morphism(const AdmissibleMorphism& f1, const AdmissibleMorphism& f2,
                               const AdmissibleMorphism& a, const AdmissibleMorphism& b) {
    if (!is_interior_open_immersion(a.map) || !is_interior_open_immersion(b.map)) {
        fail(ErrorKind::NotOpenImmersion, "connecting maps must be interior open immersions");
    }
    if (f2.map.compose(a.map) != b.map.compose(f1.map)) {
        fail(ErrorKind::InconsistentInput, "connecting maps do not commute");
    }
    OffDiagonal od1 = off_diagonal(f1);
    OffDiagonal od2 = off_diagonal(f2);
    if (od1.pair.is_empty()) {
        return AdmissibleMorphism::make(od1.pair, od2.pair, RationalMap{});
    }
    AdmissibleMorphism g1 = AdmissibleMorphism::make(od1.pair, f2.source, a.map.compose(od1.pr1.map));
    AdmissibleMorphism g2 = AdmissibleMorphism::make(od1.pair, f2.source, a.map.compose(od1.pr2.map));
    AdmissibleMorphism into = factor_through(od2.square, g1, g2);
    RationalMap m;
    for (const auto& part : into.map.parts) {
        auto pos = std::find(od2.rest.begin(), od2.rest.end(), static_cast<std::size_t>(part.target()));
        if (pos == od2.rest.end()) {
            fail(ErrorKind::InconsistentInput, "off-diagonal component lands on the diagonal");
        }
        m.parts.emplace_back(static_cast<int>(pos - od2.rest.begin()), part.function());
    }
    return AdmissibleMorphism::make(od1.pair, od2.pair, m);
}

BaseChangeReport od_base_change_check(const AdmissibleMorphism& f, const AdmissibleMorphism& g) {
    BaseChangeReport r;
    FiberProduct pulled = canonical_fiber_product(f, g); // U' = U x_M N'
    OffDiagonal lhs = off_diagonal(pulled.p2);
    OffDiagonal od = off_diagonal(f);
    AdmissibleMorphism od_to_m = f.after(od.pr1);
    FiberProduct rhs = canonical_fiber_product(od_to_m, g);
    r.od_of_pullback = lhs.pair;
    r.pullback_of_od = rhs.pair;

    // both sides map to N' and to U x U
    RationalMap lhs_base = pulled.p2.map.compose(lhs.pr1.map);
    RationalMap rhs_base = rhs.p2.map;
    RationalMap lhs_u1 = pulled.p1.map.compose(lhs.pr1.map);
    RationalMap lhs_u2 = pulled.p1.map.compose(lhs.pr2.map);
    RationalMap rhs_u1 = od.pr1.map.compose(rhs.p1.map);
    RationalMap rhs_u2 = od.pr2.map.compose(rhs.p1.map);
    IsoOptions o;
    o.over_source = &lhs_base;
    o.over_target = &rhs_base;
    o.accept = [&](std::size_t i, std::size_t j, const RationalFunction& phi) {
        auto same = [&](const ComponentMap& l, const ComponentMap& rr) {
            return l.target() == rr.target() && rr.function().compose(phi) == l.function();
        };
        return same(lhs_u1[i], rhs_u1[j]) && same(lhs_u2[i], rhs_u2[j]);
    };
    r.iso = iso_modulus_pairs(lhs.pair, rhs.pair, o);
    r.holds = r.iso.found();
    r.detail = r.iso.detail;
    return r;
}

} // namespace mvtop
