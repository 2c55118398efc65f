#pragma once

#include "mvtop/algebra/poly.hpp"
#include "mvtop/curve/place.hpp"

#include <optional>
#include <vector>

namespace mvtop {

/// One place of the normalization of F(x, y) = 0 over a rational center of
/// the x-line. With T a uniformizer of the branch,
///   x - a = x_scale * T^e   (or 1/x = x_scale * T^e at infinity)
///   y     = sum_i y_terms[i] * T^(y_low + i)   for exponents below y_valid.
/// Coefficients are only produced when the branch is defined over Q.
struct PuiseuxBranch {
    Place center;
    int ramification = 1;
    int residue_degree = 1;
    bool rational = true;
    /// v_T(y); nullopt when y vanishes identically on the branch.
    std::optional<long> y_valuation;
    Rat x_scale = 1;
    long y_low = 0;
    std::vector<Rat> y_terms;
    long y_valid = 0;

    /// v(y) / e, i.e. in units of v(x - a). Requires y_valuation.
    [[nodiscard]] Rat y_slope() const;
};

int initial_puiseux_order(const Poly& f);

/// All branches over the center (including those with y -> infinity).
/// f in variables x, y, squarefree in y, center rational (or infinity).
/// Throws PrecisionExhausted, UnsupportedBoundary, InvalidArgument.
std::vector<PuiseuxBranch> puiseux_branches(const Poly& f, const Place& center, int order);
std::vector<PuiseuxBranch> puiseux_branches(const Poly& f, const Place& center);

/// Moves the center to x = 0: F(x + a, y), or x^deg F(1/x, y) at infinity.
Poly recenter(const Poly& f, const Place& center);

} // namespace mvtop
