#pragma once

#include "mvtop/curve/divisor.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mvtop {

/// Rational function num/den on P^1 in the affine coordinate x, with
/// coprime parts and monic denominator.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(UniPoly::x(), UniPoly(1)) {}
    RationalFunction(UniPoly num, UniPoly den);

    static RationalFunction identity() { return {}; }
    static RationalFunction constant(const Rat& c) { return {UniPoly(c), UniPoly(1)}; }
    /// (a x + b) / (c x + d)
    static RationalFunction mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

    [[nodiscard]] const UniPoly& num() const { return num_; }
    [[nodiscard]] const UniPoly& den() const { return den_; }
    [[nodiscard]] int degree() const { return std::max(num_.degree(), den_.degree()); }
    [[nodiscard]] bool is_constant() const { return degree() <= 0; }
    [[nodiscard]] bool is_mobius() const { return degree() == 1; }
    [[nodiscard]] bool is_identity() const;

    /// Value at a rational point (nullopt = infinity as argument or value).
    [[nodiscard]] std::optional<Rat> eval(const std::optional<Rat>& at) const;
    /// Image of a closed point (f must be nonconstant or the point arbitrary).
    [[nodiscard]] Place image(const Place& p) const;
    /// Constant value as a place (f constant).
    [[nodiscard]] Place constant_place() const;

    /// this o inner
    [[nodiscard]] RationalFunction compose(const RationalFunction& inner) const;
    [[nodiscard]] RationalFunction mobius_inverse() const;

    /// Sum_k q_k num^k den^(deg - k): vanishes at the finite preimages of
    /// the place q(x) = 0 with multiplicity the ramification index.
    [[nodiscard]] UniPoly homogenized(const UniPoly& q) const;

    /// Preimages of a place with ramification indices.
    [[nodiscard]] std::vector<std::pair<Place, int>> preimage(const Place& q) const;
    [[nodiscard]] int ramification_index(const Place& p) const;

    /// "x^2", "(x^2 + 1)/x"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
    friend auto operator<=>(const RationalFunction&, const RationalFunction&) = default;

private:
    UniPoly num_;
    UniPoly den_;
};

RationalFunction parse_rational_function(const std::string& text);

/// f* D. Throws ConstantMapOverSupport when f is constant with value in |D|.
Divisor pullback_divisor(const RationalFunction& f, const Divisor& d);

/// Sum of (e_P - 1) [P]. Throws ConstantComponent.
Divisor ramification_divisor(const RationalFunction& f);

/// Irreducible factors of a nonzero polynomial as places, with multiplicity.
std::vector<std::pair<Place, int>> places_of(const UniPoly& p);

} // namespace mvtop
