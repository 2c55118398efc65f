#pragma once

#include "mvtop/offdiag/off_diagonal.hpp"
#include "mvtop/squares/witness.hpp"

#include <optional>

namespace mvtop {

struct BuiltSquare {
    MSquare t;
    std::optional<WitnessData> w;
};

/// Square over a one-component proper pair M:
///   T11 = M, T10 = (P^1, M + d Z), T01 = (P^1, cover* M + c E),
///   T00 = canonical fiber product; witness S removes Z, E and the
///   ramification of the cover. c and d must be positive when E, Z are
///   nonempty. Throws NotNisnevich when S fails the
///   elementary Nisnevich test.
BuiltSquare build_nisnevich_mv_square(const ModulusPair& m, const std::set<Place>& z, const RationalFunction& cover,
                                      const std::set<Place>& e, int c, int d);

/// Two opens P^1 - Z and P^1 - E of M (Z, E disjoint).
BuiltSquare build_zariski_square(const ModulusPair& m, const std::set<Place>& z, const std::set<Place>& e, int c,
                                 int d);

struct MvReport {
    Verdict cond1 = Verdict::Unknown;
    Verdict cond2 = Verdict::Unknown;
    Verdict cond3 = Verdict::Unknown;
    Verdict verdict = Verdict::Unknown;
    std::string detail1;
    std::string detail2;
    std::string detail3;
    std::optional<AdmissibleMorphism> comparison; // T00 -> T10 x T01
    std::optional<AdmissibleMorphism> od_map;     // OD(q) -> OD(p)
};

/// cond1 pull-back, cond2 witness (unknown without one), cond3 OD(q) ~ OD(p).
MvReport is_mv_square(const MSquare& t, const WitnessData* w = nullptr);

/// T x_{T11} L along h: L -> T11, with the base-changed witness when given.
BuiltSquare base_change_square(const MSquare& t, const AdmissibleMorphism& h, const WitnessData* w = nullptr);

/// (T00, T01, T00 x_{T10} T00, T01 x_{T11} T01) with diagonal vertical edges,
/// and its witness. Requires cond3 for T.
BuiltSquare derived_square(const MSquare& t);

/// Inverse of a componentwise Mobius isomorphism of modulus pairs.
AdmissibleMorphism inverse_isomorphism(const AdmissibleMorphism& f);

/// h: T11 -> L with h o u = f and h o p = g. Throws InconsistentInput when
/// f o q != g o v or the pieces disagree, GlueInadmissible when h fails
/// the modulus condition.
AdmissibleMorphism glue_cocartesian(const MSquare& t, const AdmissibleMorphism& f, const AdmissibleMorphism& g);

} // namespace mvtop
