#pragma once

#include "mvtop/algebra/upoly.hpp"
#include "mvtop/curve/place.hpp"

#include <optional>
#include <vector>

namespace mvtop {

struct NewtonSegment {
    int k0 = 0;
    int k1 = 0;
    Rat v0;
    Rat v1;
    [[nodiscard]] int length() const { return k1 - k0; }
    /// Valuation shared by the length() roots this segment accounts for.
    [[nodiscard]] Rat root_valuation() const { return (v0 - v1) / Rat(k1 - k0); }
};

/// Lower convex hull of the points (k, vals[k]); missing entries are +inf.
std::vector<NewtonSegment> lower_hull(const std::vector<std::optional<Rat>>& vals);

struct RootValuations {
    std::vector<std::pair<Rat, int>> finite; // (valuation, number of roots)
    int zero_roots = 0;                      // roots equal to 0 identically
};

/// Valuations, at the place q of the coefficient field Q(x), of the roots w
/// of sum_k coeffs[k](x) w^k.
RootValuations root_valuations(const std::vector<UniPoly>& coeffs, const Place& q);

} // namespace mvtop
