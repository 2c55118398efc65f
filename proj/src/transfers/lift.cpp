#include "mvtop/transfers/lift.hpp"

#include "mvtop/algebra/factor_bi.hpp"
#include "mvtop/error.hpp"
#include "mvtop/squares/mv.hpp"

#include <algorithm>

namespace mvtop {

namespace {

// F(x, g(y)) cleared of denominators; F(x, c) for a constant component.
Poly pull_target(const Poly& f, const ComponentMap& g) {
    if (g.is_constant()) {
        const Place& c = g.constant();
        if (!c.is_rational() || c.is_infinity()) {
            fail(ErrorKind::UnsupportedCurve, "constant component at a non-affine rational place");
        }
        return f.eval(VY, c.value());
    }
    const RationalFunction& h = g.function();
    return f.substitute_fraction(VY, Poly::from_uni(h.num(), VY), Poly::from_uni(h.den(), VY));
}

} // namespace

std::vector<ElemCorr> lift_into(const AdmissibleMorphism& a, const AdmissibleMorphism& b, const ElemCorr& alpha1,
                                const ElemCorr& alpha2, const ModulusPair& m) {
    std::vector<ElemCorr> out;
    for (std::size_t c = 0; c < a.map.size(); ++c) {
        if (static_cast<std::size_t>(a.map[c].target()) != alpha1.target ||
            static_cast<std::size_t>(b.map[c].target()) != alpha2.target) {
            continue;
        }
        Poly n1 = pull_target(alpha1.f, a.map[c]);
        Poly n2 = pull_target(alpha2.f, b.map[c]);
        if (n1.is_zero() && n2.is_zero()) {
            continue;
        }
        const Poly& base = n1.is_zero() ? n2 : n1;
        const Poly& other = n1.is_zero() ? n1 : n2;
        for (const auto& pf : factor_bi(base)) {
            if (!pf.factor.involves(VY) || !exact_div(other, pf.factor)) {
                continue;
            }
            ElemCorr gamma = ElemCorr::make(alpha1.source, c, pf.factor);
            if (push_forward(a, gamma, m).image == alpha1 && push_forward(b, gamma, m).image == alpha2) {
                out.push_back(gamma);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ElemCorr rho_lift(const ElemCorr& alpha1, const ElemCorr& alpha2, const MSquare& t, const ModulusPair& m) {
    if (push_forward(t.u, alpha1, m).image != push_forward(t.p, alpha2, m).image) {
        fail(ErrorKind::NoLift, "images in T11 differ: " + alpha1.to_string() + " vs " + alpha2.to_string());
    }
    auto cands = lift_into(t.q, t.v, alpha1, alpha2, m);
    if (cands.empty()) {
        fail(ErrorKind::NoLift, "no component of T00 lies over both correspondences");
    }
    if (cands.size() > 1 && is_interior_open_immersion(t.v.map)) {
        fail(ErrorKind::InconsistentInput, "lift through an open immersion is not unique");
    }
    return cands.front();
}

MvLiftContext::MvLiftContext(MSquare t, ModulusPair m) : t_(std::move(t)), m_(std::move(m)) {}

void MvLiftContext::require_od() const {
    if (!od_done_) {
        od_done_ = true;
        try {
            AdmissibleMorphism phi = od_morphism(t_.q, t_.p, t_.v, t_.u);
            if (is_isomorphism(phi.map, phi.source, phi.target)) {
                odq_ = off_diagonal(t_.q);
                odp_ = off_diagonal(t_.p);
                inverse_ = inverse_isomorphism(phi);
            } else {
                od_failure_ = "OD(q) -> OD(p) is not an isomorphism";
            }
        } catch (const Error& e) {
            od_failure_ = std::string("OD(q) -> OD(p) unavailable: ") + e.what();
        }
    }
    if (!inverse_) {
        fail(ErrorKind::InconsistentInput, "lift needs the off-diagonal identification; " + od_failure_);
    }
}

const OffDiagonal& MvLiftContext::od_q() const {
    require_od();
    return *odq_;
}

const OffDiagonal& MvLiftContext::od_p() const {
    require_od();
    return *odp_;
}

const AdmissibleMorphism& MvLiftContext::od_inverse() const {
    require_od();
    return *inverse_;
}

namespace {

struct Sheet {
    ElemCorr alpha;
    long coeff = 0;
    int degree = 1; // over the common image in T11
};

ElemCorr lift_through_od(const ElemCorr& alpha, const ElemCorr& partner, const MvLiftContext& ctx) {
    const ModulusPair& m = ctx.source();
    const OffDiagonal& odp = ctx.od_p();
    auto deltas = lift_into(odp.pr1, odp.pr2, alpha, partner, m);
    if (deltas.empty()) {
        fail(ErrorKind::NoLift, "no off-diagonal component over " + alpha.to_string());
    }
    const ElemCorr& delta = deltas.front();
    if (!check_elem_admissible(delta, m, odp.pair)) {
        fail(ErrorKind::NoLift, "pair correspondence is not admissible into OD(p)");
    }
    ElemCorr moved = push_forward(ctx.od_inverse(), delta, m).image;
    return push_forward(ctx.od_q().pr1, moved, m).image;
}

} // namespace

MvLift mv_lift(const Corr& alpha, const Corr& beta, const MvLiftContext& ctx) {
    const MSquare& t = ctx.square();
    const ModulusPair& m = ctx.source();
    for (const auto& [a, n] : alpha.terms) {
        if (!check_elem_admissible(a, m, t.t01())) {
            fail(ErrorKind::InvalidArgument, "alpha component not admissible: " + a.to_string());
        }
    }
    for (const auto& [b, n] : beta.terms) {
        if (!check_elem_admissible(b, m, t.t10())) {
            fail(ErrorKind::InvalidArgument, "beta component not admissible: " + b.to_string());
        }
    }
    if (push_forward_linear(t.p, alpha, m) != push_forward_linear(t.u, beta, m)) {
        fail(ErrorKind::InconsistentInput, "p(alpha) differs from u(beta)");
    }

    std::map<ElemCorr, std::vector<Sheet>> groups;
    for (const auto& [a, n] : alpha.terms) {
        auto pf = push_forward(t.p, a, m);
        groups[pf.image].push_back({a, n, pf.degree});
    }
    std::map<ElemCorr, ElemCorr> over;
    for (const auto& [b, n] : beta.terms) {
        over.emplace(push_forward(t.u, b, m).image, b);
    }

    MvLift out;
    out.unique = is_interior_open_immersion(t.v.map);
    for (const auto& [w, sheets] : groups) {
        auto hit = over.find(w);
        for (std::size_t i = 0; i < sheets.size(); ++i) {
            ElemCorr gamma;
            if (hit != over.end()) {
                gamma = rho_lift(hit->second, sheets[i].alpha, t, m);
                ++out.via_rho;
            } else {
                if (sheets.size() < 2) {
                    fail(ErrorKind::InconsistentInput, "isolated sheet without a matching beta component");
                }
                gamma = lift_through_od(sheets[i].alpha, sheets[(i + 1) % sheets.size()].alpha, ctx);
                ++out.via_od;
            }
            if (!check_elem_admissible(gamma, m, t.t00())) {
                fail(ErrorKind::NoLift, "lifted component is not admissible: " + gamma.to_string());
            }
            out.gamma.add(gamma, sheets[i].coeff);
        }
    }

    if (push_forward_linear(t.v, out.gamma, m) != alpha || push_forward_linear(t.q, out.gamma, m) != beta) {
        fail(ErrorKind::NoLift, "lift does not reproduce (alpha, beta)");
    }
    return out;
}

MvLift mv_lift(const Corr& alpha, const Corr& beta, const MSquare& t, const ModulusPair& m) {
    return mv_lift(alpha, beta, MvLiftContext(t, m));
}

} // namespace mvtop
