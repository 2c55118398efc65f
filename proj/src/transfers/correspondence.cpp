#include "mvtop/transfers/correspondence.hpp"

#include "mvtop/algebra/factor_bi.hpp"
#include "mvtop/algebra/newton.hpp"
#include "mvtop/algebra/puiseux.hpp"
#include "mvtop/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mvtop {

ElemCorr ElemCorr::make(std::size_t source, std::size_t target, const Poly& f) {
    if (f.involves(VZ) || f.involves(VT)) {
        fail(ErrorKind::InvalidArgument, "correspondence must be a curve in x, y: " + f.to_string());
    }
    if (f.degree(VY) < 1) {
        fail(ErrorKind::InvalidArgument, "correspondence has no degree in the target coordinate: " + f.to_string());
    }
    if (!is_irreducible(f)) {
        fail(ErrorKind::InvalidArgument, "correspondence is reducible: " + f.to_string());
    }
    return {source, target, f.primitive()};
}

std::string ElemCorr::to_string() const {
    std::ostringstream os;
    os << "V[" << source << "->" << target << "](" << f.to_string() << ")";
    return os.str();
}

std::strong_ordering operator<=>(const ElemCorr& a, const ElemCorr& b) {
    if (auto c = a.source <=> b.source; c != 0) {
        return c;
    }
    if (auto c = a.target <=> b.target; c != 0) {
        return c;
    }
    return a.f <=> b.f;
}

ElemCorr graph(std::size_t source, const ComponentMap& f) {
    auto target = static_cast<std::size_t>(f.target());
    if (f.is_constant()) {
        const Place& c = f.constant();
        if (c.is_infinity()) {
            fail(ErrorKind::UnsupportedCurve, "constant map to infinity has no affine graph");
        }
        return ElemCorr::make(source, target, Poly::from_uni(c.poly(), VY));
    }
    const RationalFunction& h = f.function();
    Poly g = Poly::from_uni(h.den(), VX) * Poly::var(VY) - Poly::from_uni(h.num(), VX);
    return ElemCorr::make(source, target, g);
}

namespace {

/// Polynomial in (x, w) whose roots in w are the local equation of r along
/// the branches of F: y - r, 1/y, or r(y).
Poly target_equation(const Poly& f, const Place& r, int& wvar) {
    if (r.is_infinity()) {
        wvar = VY;
        return f.reverse(VY, f.degree(VY));
    }
    if (r.is_rational()) {
        wvar = VY;
        return f.substitute(VY, Poly::var(VY) + Poly(r.value()));
    }
    wvar = VZ;
    return resultant(f, Poly::var(VZ) - Poly::from_uni(r.poly(), VY), VY);
}

Rat polygon_slope(const Poly& f, const Place& q, const Place& r) {
    int w = VY;
    Poly g = target_equation(f, r, w);
    std::vector<UniPoly> cs;
    for (const Poly& c : g.coeffs_in(w)) {
        cs.push_back(c.to_uni(VX));
    }
    auto rv = root_valuations(cs, q);
    if (rv.zero_roots > 0) {
        fail(ErrorKind::InvalidArgument, "correspondence is constant at a boundary place " + r.to_string());
    }
    Rat s = 0;
    for (const auto& [val, count] : rv.finite) {
        s = std::max(s, val);
    }
    return s;
}

Rat puiseux_slope(const Poly& f, const Place& q, const Place& r) {
    int w = VY;
    Poly g = target_equation(f, r, w);
    Rat s = 0;
    if (!recenter(g, q).eval(VX, 0).eval(VY, 0).is_zero()) {
        return s; // (q, r) is not on the curve
    }
    // slopes are settled by the first Newton level; keep the expansion short
    for (const auto& b : puiseux_branches(g, q, 1)) {
        if (!b.y_valuation) {
            fail(ErrorKind::InvalidArgument, "correspondence is constant at a boundary place " + r.to_string());
        }
        s = std::max(s, b.y_slope());
    }
    return s;
}

std::set<Place> candidate_centers(const Poly& f, const std::set<Place>& targets, const Divisor& source_mod) {
    std::set<Place> out{Place::infinity()};
    for (const Place& p : source_mod.support()) {
        out.insert(p);
    }
    int dy = f.degree(VY);
    for (const Place& r : targets) {
        UniPoly h;
        if (r.is_infinity()) {
            h = f.coeff(VY, dy).to_uni(VX);
        } else {
            Poly res = resultant(f, Poly::from_uni(r.poly(), VY), VY);
            if (res.is_zero()) {
                fail(ErrorKind::InvalidArgument, "correspondence contains a boundary fiber " + r.to_string());
            }
            h = res.to_uni(VX);
        }
        if (h.degree() > 0) {
            for (const auto& [p, mult] : places_of(h)) {
                out.insert(p);
            }
        }
    }
    return out;
}

} // namespace

ElemAdmissibility elem_admissibility(const ElemCorr& v, const ModulusPair& m, const ModulusPair& n,
                                     ValuationRoute route) {
    if (v.source >= m.size() || v.target >= n.size()) {
        fail(ErrorKind::InvalidArgument, "correspondence component out of range: " + v.to_string());
    }
    std::set<Place> targets = n.boundary(v.target);
    ElemAdmissibility rep;
    rep.admissible = true;
    for (const Place& q : candidate_centers(v.f, targets, m.divisor(v.source))) {
        if (m.deleted(v.source).contains(q)) {
            continue;
        }
        int mq = m.divisor(v.source).mult(q);
        for (const Place& r : targets) {
            BranchCheck bc{q, r, 0, mq, n.divisor(v.target).mult(r), false};
            bool try_puiseux = route != ValuationRoute::Polygon && q.is_rational() && r.is_rational();
            if (route == ValuationRoute::Puiseux && !try_puiseux) {
                fail(ErrorKind::UnsupportedBoundary, "branch expansion needs rational places");
            }
            if (try_puiseux) {
                try {
                    bc.slope = puiseux_slope(v.f, q, r);
                    bc.puiseux = true;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::UnsupportedBoundary || route == ValuationRoute::Puiseux) {
                        throw;
                    }
                }
            }
            if (!bc.puiseux) {
                bc.slope = polygon_slope(v.f, q, r);
            }
            if (bc.slope <= 0) {
                continue;
            }
            if (mq == 0) {
                fail(ErrorKind::InvalidArgument,
                     "interior point " + q.to_string() + " reaches the target boundary at " + r.to_string());
            }
            rep.checks.push_back(bc);
            if (n.deleted(v.target).contains(r)) {
                rep.admissible = false;
                rep.detail += "branch over " + q.to_string() + " runs into deleted " + r.to_string() + "; ";
            } else if (Rat(mq) < Rat(bc.target_mult) * bc.slope) {
                rep.admissible = false;
                rep.detail += "at " + q.to_string() + " -> " + r.to_string() + ": " + std::to_string(mq) + " < " +
                              std::to_string(bc.target_mult) + "*" + bc.slope.get_str() + "; ";
            }
        }
    }
    return rep;
}

bool check_elem_admissible(const ElemCorr& v, const ModulusPair& m, const ModulusPair& n) {
    return elem_admissibility(v, m, n).admissible;
}

Corr::Corr(const ElemCorr& v, long n) { add(v, n); }

void Corr::add(const ElemCorr& v, long n) {
    if (n == 0) {
        return;
    }
    auto [it, fresh] = terms.try_emplace(v, n);
    if (!fresh) {
        it->second += n;
        if (it->second == 0) {
            terms.erase(it);
        }
    }
}

std::string Corr::to_string() const {
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [v, n] : terms) {
        if (!out.empty()) {
            out += n < 0 ? " - " : " + ";
        } else if (n < 0) {
            out += "-";
        }
        long a = n < 0 ? -n : n;
        if (a != 1) {
            out += std::to_string(a) + "*";
        }
        out += v.to_string();
    }
    return out;
}

Corr operator+(Corr a, const Corr& b) {
    for (const auto& [v, n] : b.terms) {
        a.add(v, n);
    }
    return a;
}

Corr operator-(Corr a, const Corr& b) {
    for (const auto& [v, n] : b.terms) {
        a.add(v, -n);
    }
    return a;
}

Corr operator*(long k, Corr a) {
    if (k == 0) {
        return {};
    }
    for (auto& [v, n] : a.terms) {
        n *= k;
    }
    return a;
}

namespace {

// Specialize x and compare the eliminant with W(x0, z)^k.
void check_random_fiber(const Poly& f, const Poly& rel, const Poly& w, int k) {
    int dy = f.degree(VY);
    for (long x0 = 2; x0 < 40; ++x0) {
        Poly fx = f.eval(VX, x0);
        Poly wx = w.eval(VX, x0);
        if (fx.degree(VY) != dy || wx.degree(VY) != w.degree(VY) || !is_squarefree_in(wx, VY)) {
            continue;
        }
        UniPoly r0 = resultant(fx, rel, VY).to_uni(VZ);
        UniPoly w0 = wx.to_uni(VY).pow(k);
        auto [quot, rem] = divmod(r0, w0);
        if (!rem.is_zero() || quot.degree() != 0) {
            fail(ErrorKind::InconsistentInput, "pushforward fiber count mismatch at x = " + std::to_string(x0));
        }
        return;
    }
}

} // namespace

PushForward push_forward(const AdmissibleMorphism& g, const ElemCorr& v, const ModulusPair& m) {
    if (v.target >= g.map.size()) {
        fail(ErrorKind::InvalidArgument, "correspondence target outside the map's source");
    }
    const ComponentMap& gc = g.map[v.target];
    auto target = static_cast<std::size_t>(gc.target());
    int dy = v.f.degree(VY);
    PushForward out;
    if (gc.is_constant()) {
        const Place& c = gc.constant();
        if (c.is_infinity() || dy % c.degree() != 0) {
            fail(ErrorKind::UnsupportedCurve, "constant pushforward to " + c.to_string());
        }
        out.image = ElemCorr::make(v.source, target, Poly::from_uni(c.poly(), VY));
        out.degree = dy / c.degree();
    } else if (gc.function().is_mobius()) {
        RationalFunction inv = gc.function().mobius_inverse();
        Poly w = v.f.substitute_fraction(VY, Poly::from_uni(inv.num(), VY), Poly::from_uni(inv.den(), VY), dy);
        out.image = ElemCorr::make(v.source, target, w);
    } else {
        const RationalFunction& h = gc.function();
        Poly rel = Poly::from_uni(h.den(), VY) * Poly::var(VZ) - Poly::from_uni(h.num(), VY);
        Poly res = resultant(v.f, rel, VY).swap_vars(VY, VZ);
        std::vector<PolyFactor> image;
        for (const auto& pf : factor_bi(res)) {
            if (pf.factor.involves(VY)) {
                image.push_back(pf);
            }
        }
        if (image.size() != 1) {
            fail(ErrorKind::InconsistentInput, "pushforward image is not irreducible: " + res.to_string());
        }
        const Poly& w = image[0].factor;
        out.degree = image[0].multiplicity;
        if (dy != out.degree * w.degree(VY)) {
            fail(ErrorKind::InconsistentInput, "pushforward degree mismatch for " + v.to_string());
        }
        check_random_fiber(v.f, rel, w, out.degree);
        out.image = ElemCorr::make(v.source, target, w);
    }
    if (!check_elem_admissible(out.image, m, g.target)) {
        fail(ErrorKind::InconsistentInput, "pushforward is not admissible: " + out.image.to_string());
    }
    return out;
}

Corr push_forward_linear(const AdmissibleMorphism& g, const Corr& alpha, const ModulusPair& m) {
    Corr out;
    for (const auto& [v, n] : alpha.terms) {
        auto pf = push_forward(g, v, m);
        out.add(pf.image, n * pf.degree);
    }
    return out;
}

} // namespace mvtop
