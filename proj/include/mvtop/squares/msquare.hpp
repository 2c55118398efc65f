#pragma once

#include "mvtop/modulus/fiber_product.hpp"

#include <optional>

namespace mvtop {

/// Commutative square
///   T00 --v--> T01
///    |q         |p
///   T10 --u--> T11
struct MSquare {
    AdmissibleMorphism u; // T10 -> T11
    AdmissibleMorphism p; // T01 -> T11
    AdmissibleMorphism v; // T00 -> T01
    AdmissibleMorphism q; // T00 -> T10

    [[nodiscard]] const ModulusPair& t00() const { return v.source; }
    [[nodiscard]] const ModulusPair& t01() const { return p.source; }
    [[nodiscard]] const ModulusPair& t10() const { return u.source; }
    [[nodiscard]] const ModulusPair& t11() const { return u.target; }

    /// Corners agree between edges and u o q = p o v.
    [[nodiscard]] bool commutes() const;
    [[nodiscard]] bool all_proper() const;
    [[nodiscard]] bool all_minimal() const;
    [[nodiscard]] bool all_admissible() const;
};

struct PullbackReport {
    bool holds = false;
    std::string detail;
    std::optional<FiberProduct> product;
    /// T00 -> T10 x_T11 T01, an isomorphism when holds.
    std::optional<AdmissibleMorphism> comparison;
};

PullbackReport is_pullback_square(const MSquare& t);

} // namespace mvtop
