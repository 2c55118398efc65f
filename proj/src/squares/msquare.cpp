#include "mvtop/squares/msquare.hpp"

#include "mvtop/error.hpp"

namespace mvtop {

bool MSquare::commutes() const {
    if (!q.target.same_as(u.source) || !v.target.same_as(p.source) || !u.target.same_as(p.target) ||
        !q.source.same_as(v.source)) {
        return false;
    }
    return u.map.compose(q.map) == p.map.compose(v.map);
}

bool MSquare::all_proper() const {
    return t00().is_proper() && t01().is_proper() && t10().is_proper() && t11().is_proper();
}

bool MSquare::all_minimal() const { return u.minimal() && p.minimal() && v.minimal() && q.minimal(); }

bool MSquare::all_admissible() const {
    return u.admissible() && p.admissible() && v.admissible() && q.admissible();
}

PullbackReport is_pullback_square(const MSquare& t) {
    PullbackReport r;
    if (!t.commutes()) {
        r.detail = "square does not commute";
        return r;
    }
    r.product = canonical_fiber_product(t.u, t.p);
    try {
        r.comparison = factor_through(*r.product, t.q, t.v);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InconsistentInput && e.kind() != ErrorKind::InteriorViolation &&
            e.kind() != ErrorKind::NonProperSource) {
            throw;
        }
        r.detail = e.what();
        return r;
    }
    if (!r.comparison->admissible()) {
        r.detail = "comparison map is not admissible: " + r.comparison->flags.detail;
    } else if (!is_isomorphism(r.comparison->map, t.t00(), r.product->pair)) {
        r.detail = "comparison map is not an isomorphism onto " + r.product->pair.to_string();
    } else {
        r.holds = true;
    }
    return r;
}

} // namespace mvtop
