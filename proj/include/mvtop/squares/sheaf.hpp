#pragma once

#include "mvtop/squares/msquare.hpp"

#include <array>
#include <vector>

namespace mvtop {

/// Finite presheaf of sets evaluated on a square: sizes of F(T(ij)) and of
/// F(empty), and the restriction maps as index vectors.
struct PresheafTable {
    std::size_t empty_size = 1;
    std::size_t f00 = 0;
    std::size_t f01 = 0;
    std::size_t f10 = 0;
    std::size_t f11 = 0;
    std::vector<std::size_t> along_u; // F(11) -> F(10)
    std::vector<std::size_t> along_p; // F(11) -> F(01)
    std::vector<std::size_t> along_v; // F(01) -> F(00)
    std::vector<std::size_t> along_q; // F(10) -> F(00)
};

struct SheafReport {
    bool holds = false;
    std::string detail;
};

/// F(empty) a point and F(11) -> F(10) x_{F(00)} F(01) bijective.
/// Throws MalformedTable on out-of-range indices or non-commuting maps.
SheafReport sheaf_check_finite_presheaf(const PresheafTable& t);

/// Hom(-, L) on the corners of T restricted to the Mobius maps with
/// integer coefficients of absolute value <= height. Restrictions along
/// edges must stay in the family (MalformedTable otherwise), which holds
/// when every edge is componentwise the identity function.
PresheafTable representable_table(const MSquare& t, const ModulusPair& l, int height);

} // namespace mvtop
