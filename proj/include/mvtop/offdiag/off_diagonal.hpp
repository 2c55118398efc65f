#pragma once

#include "mvtop/modulus/fiber_product.hpp"
#include "mvtop/modulus/iso.hpp"

namespace mvtop {

/// Nonconstant on every component and unramified on the source interior.
/// Throws ConstantComponent.
bool is_interior_etale(const AdmissibleMorphism& f);

struct OffDiagonal {
    ModulusPair pair;
    FiberProduct square;                 // U x_M U
    std::vector<std::size_t> diagonal;   // fiber component of the diagonal, per source component
    std::vector<std::size_t> rest;       // fiber component of each OD component
    AdmissibleMorphism pr1;              // OD -> U
    AdmissibleMorphism pr2;              // OD -> U
    /// U + OD -> U x_M U, checked to be an isomorphism.
    AdmissibleMorphism decomposition;
};

/// Throws NotEtale, UnsupportedCurve.
OffDiagonal off_diagonal(const AdmissibleMorphism& f);

/// Map OD(f1) -> OD(f2) induced by a: U1 -> U2 over b: N1 -> N2; both must
/// be interior open immersions (NotOpenImmersion) and f2 o a = b o f1.
AdmissibleMorphism od_morphism(const AdmissibleMorphism& f1, const AdmissibleMorphism& f2,
                               const AdmissibleMorphism& a, const AdmissibleMorphism& b);

struct BaseChangeReport {
    bool holds = false;
    ModulusPair od_of_pullback;  // OD(f x_M N')
    ModulusPair pullback_of_od;  // OD(f) x_M N'
    IsoResult iso;
    std::string detail;
};

/// OD(f x_M N') against OD(f) x_M N', compared by an isomorphism over N'
/// that also commutes with the projections to U.
BaseChangeReport od_base_change_check(const AdmissibleMorphism& f, const AdmissibleMorphism& g);

} // namespace mvtop
