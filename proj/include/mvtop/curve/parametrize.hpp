#pragma once

#include "mvtop/algebra/poly.hpp"
#include "mvtop/curve/rational_function.hpp"

#include <optional>
#include <string>

namespace mvtop {

/// Birational map from P^1 (coordinate t, written as x in the stored
/// functions) onto the curve F(x, y) = 0, with its inverse on the curve.
struct Parametrization {
    RationalFunction x;
    RationalFunction y;
    Poly inverse_num;
    Poly inverse_den;
    std::string kind;

    /// t at a curve point (nullopt when the inverse is undefined there).
    [[nodiscard]] std::optional<Rat> inverse_at(const Rat& px, const Rat& py) const;
};

/// Supported: vertical/horizontal lines, degree 1 in either variable,
/// binomials x^a y^b = c, and conics with a rational point of height <= 100.
/// Throws UnsupportedCurve otherwise.
Parametrization parametrize_component(const Poly& f);

/// Rational point (x0, y0) on a nondegenerate affine conic with
/// height(x0) <= bound, scanning numerators then denominators.
std::optional<std::pair<Rat, Rat>> find_conic_point(const Poly& f, int bound = 100);

} // namespace mvtop
