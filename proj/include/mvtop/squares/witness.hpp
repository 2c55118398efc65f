#pragma once

#include "mvtop/squares/msquare.hpp"

namespace mvtop {

enum class Verdict { True, False, Unknown };

std::string to_string(Verdict v);

/// Non-proper square S with connecting morphisms S(ij) -> T(ij).
struct WitnessData {
    MSquare s;
    AdmissibleMorphism c00;
    AdmissibleMorphism c01;
    AdmissibleMorphism c10;
    AdmissibleMorphism c11;
};

struct CheckReport {
    bool holds = false;
    std::string detail;
};

/// Minimal edges, ambient square an elementary Nisnevich square: u an open
/// immersion, p etale, cartesian, and the reduced complements isomorphic.
CheckReport check_ulmv_square(const MSquare& s);

/// Interior isomorphism: componentwise Mobius, bijective on components,
/// boundary places carried exactly onto boundary places.
bool is_interior_isomorphism(const AdmissibleMorphism& c);

/// Verifies W as a witness for T.
CheckReport check_witness(const MSquare& t, const WitnessData& w);

} // namespace mvtop
