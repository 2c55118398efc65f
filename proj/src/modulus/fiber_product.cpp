#include "mvtop/modulus/fiber_product.hpp"

#include "mvtop/algebra/factor_bi.hpp"
#include "mvtop/error.hpp"

namespace mvtop {

namespace {

Poly in_t(const UniPoly& p) { return Poly::from_uni(p, VT); }

std::set<Place> preimage_set(const RationalFunction& f, const std::set<Place>& places) {
    std::set<Place> out;
    for (const auto& q : places) {
        for (const auto& [p, e] : f.preimage(q)) {
            out.insert(p);
        }
    }
    return out;
}

// images of interior ramification points
std::set<Place> interior_branch_images(const RationalFunction& f, const ModulusPair& m, std::size_t i) {
    std::set<Place> out;
    Divisor r = ramification_divisor(f);
    for (const auto& [p, k] : r.terms()) {
        if (m.in_interior(i, p)) {
            out.insert(f.image(p));
        }
    }
    return out;
}

} // namespace

Poly fiber_equation(const RationalFunction& f1, const RationalFunction& f2) {
    Poly a = Poly::from_uni(f1.num(), VX) * Poly::from_uni(f2.den(), VY);
    Poly b = Poly::from_uni(f2.num(), VY) * Poly::from_uni(f1.den(), VX);
    return a - b;
}

std::pair<UniPoly, UniPoly> eval_on(const Poly& p, const RationalFunction& a, const RationalFunction& b) {
    int dx = p.degree(VX);
    int dy = p.degree(VY);
    Poly s = p.substitute_fraction(VX, in_t(a.num()), in_t(a.den()), dx);
    s = s.substitute_fraction(VY, in_t(b.num()), in_t(b.den()), dy);
    UniPoly num = s.is_zero() ? UniPoly() : s.to_uni(VT);
    return {num, a.den().pow(dx) * b.den().pow(dy)};
}

FiberProduct canonical_fiber_product(const AdmissibleMorphism& f1, const AdmissibleMorphism& f2) {
    const ModulusPair& m1 = f1.source;
    const ModulusPair& m2 = f2.source;
    if (!f1.target.same_as(f2.target)) {
        fail(ErrorKind::InvalidArgument, "fiber product legs have different targets");
    }
    FiberProduct fp;
    RationalMap pr1;
    RationalMap pr2;
    for (std::size_t i = 0; i < m1.size(); ++i) {
        for (std::size_t j = 0; j < m2.size(); ++j) {
            const ComponentMap& a = f1.map[i];
            const ComponentMap& b = f2.map[j];
            if (a.target() != b.target()) {
                continue;
            }
            if (a.is_constant() || b.is_constant()) {
                fail(ErrorKind::ConstantComponent, "fiber product with a constant leg");
            }
            std::set<Place> branch1 = interior_branch_images(a.function(), m1, i);
            for (const auto& q : interior_branch_images(b.function(), m2, j)) {
                if (branch1.count(q) != 0) {
                    fail(ErrorKind::NonSmoothFiberProduct,
                         "both legs ramify over interior place " + q.to_string());
                }
            }
            for (const auto& [g, mult] : factor_bi(fiber_equation(a.function(), b.function()))) {
                if (mult > 1) {
                    fail(ErrorKind::NonSmoothFiberProduct, "repeated component " + g.to_string());
                }
                FiberComponent c{i, j, g, parametrize_component(g)};
                std::set<Place> del = preimage_set(c.param.x, m1.deleted(i));
                for (const auto& p : preimage_set(c.param.y, m2.deleted(j))) {
                    del.insert(p);
                }
                Divisor d = sup_divisor(pullback_divisor(c.param.x, m1.divisor(i)),
                                        pullback_divisor(c.param.y, m2.divisor(j)))
                                .without(del);
                std::string label = "(" + std::to_string(i) + "," + std::to_string(j) + ")" + g.to_string();
                fp.pair.ambient.components.push_back({label, del});
                fp.pair.modulus.push_back(d);
                pr1.parts.emplace_back(static_cast<int>(i), c.param.x);
                pr2.parts.emplace_back(static_cast<int>(j), c.param.y);
                fp.components.push_back(std::move(c));
            }
        }
    }
    fp.pair.validate();
    fp.p1 = AdmissibleMorphism::make(fp.pair, m1, pr1);
    fp.p2 = AdmissibleMorphism::make(fp.pair, m2, pr2);
    return fp;
}

AdmissibleMorphism factor_through(const FiberProduct& fp, const AdmissibleMorphism& g1, const AdmissibleMorphism& g2) {
    const ModulusPair& l = g1.source;
    if (!l.same_as(g2.source)) {
        fail(ErrorKind::InvalidArgument, "cone legs have different sources");
    }
    RationalMap h;
    for (std::size_t k = 0; k < l.size(); ++k) {
        const ComponentMap& a = g1.map[k];
        const ComponentMap& b = g2.map[k];
        std::vector<std::size_t> hits;
        for (std::size_t c = 0; c < fp.components.size(); ++c) {
            const FiberComponent& fc = fp.components[c];
            if (fc.left != static_cast<std::size_t>(a.target()) || fc.right != static_cast<std::size_t>(b.target())) {
                continue;
            }
            bool on_curve;
            if (a.is_constant() != b.is_constant()) {
                fail(ErrorKind::InconsistentInput, "cone leg constant on only one side");
            }
            if (a.is_constant()) {
                std::set<Place> s1 = preimage_set(fc.param.x, {a.constant()});
                std::set<Place> s2 = preimage_set(fc.param.y, {b.constant()});
                on_curve = false;
                for (const auto& p : s1) {
                    on_curve = on_curve || s2.count(p) != 0;
                }
            } else {
                on_curve = eval_on(fc.equation, a.function(), b.function()).first.is_zero();
            }
            if (on_curve) {
                hits.push_back(c);
            }
        }
        if (hits.size() != 1) {
            fail(ErrorKind::InconsistentInput, "component " + std::to_string(k) + " of the cone meets " +
                                                   std::to_string(hits.size()) + " fiber product components");
        }
        const FiberComponent& fc = fp.components[hits[0]];
        auto target = static_cast<int>(hits[0]);
        if (a.is_constant()) {
            std::set<Place> s1 = preimage_set(fc.param.x, {a.constant()});
            std::set<Place> s2 = preimage_set(fc.param.y, {b.constant()});
            std::vector<Place> common;
            for (const auto& p : s1) {
                if (s2.count(p) != 0) {
                    common.push_back(p);
                }
            }
            if (common.size() != 1) {
                fail(ErrorKind::InconsistentInput, "constant cone component is not a single point");
            }
            h.parts.push_back(ComponentMap::constant_at(target, common[0]));
            continue;
        }
        auto [nn, nd] = eval_on(fc.param.inverse_num, a.function(), b.function());
        auto [dn, dd] = eval_on(fc.param.inverse_den, a.function(), b.function());
        if (dn.is_zero()) {
            fail(ErrorKind::InconsistentInput, "inverse parametrization undefined along the cone");
        }
        h.parts.emplace_back(target, RationalFunction(nn * dd, dn * nd));
    }
    if (fp.p1.map.compose(h) != g1.map || fp.p2.map.compose(h) != g2.map) {
        fail(ErrorKind::InconsistentInput, "induced map does not reproduce the cone");
    }
    return AdmissibleMorphism::make(l, fp.pair, h);
}

} // namespace mvtop
