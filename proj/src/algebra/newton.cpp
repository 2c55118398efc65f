#include "mvtop/algebra/newton.hpp"

#include "mvtop/error.hpp"

namespace mvtop {

std::vector<NewtonSegment> lower_hull(const std::vector<std::optional<Rat>>& vals) {
    std::vector<std::pair<int, Rat>> pts;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        if (vals[k]) {
            pts.emplace_back(static_cast<int>(k), *vals[k]);
        }
    }
    std::vector<std::pair<int, Rat>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b unless it lies strictly below the chord a -> p
            Rat cross = (b.second - a.second) * Rat(p.first - a.first) -
                        (p.second - a.second) * Rat(b.first - a.first);
            if (cross >= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(p);
    }
    std::vector<NewtonSegment> segs;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        segs.push_back({hull[i - 1].first, hull[i].first, hull[i - 1].second, hull[i].second});
    }
    return segs;
}

RootValuations root_valuations(const std::vector<UniPoly>& coeffs, const Place& q) {
    RootValuations out;
    std::vector<std::optional<Rat>> vals(coeffs.size());
    bool any = false;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) {
            vals[k] = Rat(q.valuation(coeffs[k]));
            any = true;
        }
    }
    if (!any) {
        fail(ErrorKind::ZeroPolynomial, "root valuations of zero");
    }
    std::size_t first = 0;
    while (!vals[first]) {
        ++first;
    }
    out.zero_roots = static_cast<int>(first);
    for (const auto& s : lower_hull(vals)) {
        out.finite.emplace_back(s.root_valuation(), s.length());
    }
    return out;
}

} // namespace mvtop
