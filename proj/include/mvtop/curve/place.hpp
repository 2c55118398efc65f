#pragma once

#include "mvtop/algebra/upoly.hpp"

#include <compare>
#include <string>

namespace mvtop {

/// Closed point of the projective line over Q: a monic irreducible
/// polynomial in the affine coordinate, or the point at infinity.
class Place {
public:
    static Place infinity();
    /// Normalizes to monic; irreducibility is the caller's contract.
    static Place finite(const UniPoly& irreducible);
    static Place rational(const Rat& value);

    [[nodiscard]] bool is_infinity() const { return infinite_; }
    [[nodiscard]] bool is_rational() const { return infinite_ || poly_.degree() == 1; }
    [[nodiscard]] int degree() const { return infinite_ ? 1 : poly_.degree(); }
    [[nodiscard]] const UniPoly& poly() const { return poly_; }
    /// Affine value of a finite rational place.
    [[nodiscard]] Rat value() const;

    /// "inf" or the polynomial in x.
    [[nodiscard]] std::string to_string() const;

    /// Valuation of a polynomial at this place (for infinity: -degree).
    [[nodiscard]] int valuation(const UniPoly& p) const;

    friend bool operator==(const Place&, const Place&) = default;
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    bool infinite_ = false;
    UniPoly poly_;
};

/// Parses "inf", "x - 1", "x^2 + 1" (checked monic-normalized and irreducible).
Place parse_place(const std::string& text);

} // namespace mvtop
