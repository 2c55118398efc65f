#pragma once

#include "mvtop/curve/parametrize.hpp"
#include "mvtop/modulus/modulus_pair.hpp"

namespace mvtop {

struct FiberComponent {
    std::size_t left = 0;  // component of the first factor
    std::size_t right = 0; // component of the second factor
    Poly equation;         // irreducible curve in (x, y) = (left coordinate, right coordinate)
    Parametrization param;
};

struct FiberProduct {
    ModulusPair pair;
    AdmissibleMorphism p1;
    AdmissibleMorphism p2;
    std::vector<FiberComponent> components;
};

/// Numerator of f1(x) - f2(y).
Poly fiber_equation(const RationalFunction& f1, const RationalFunction& f2);

/// Normalized closure of the interior fiber product over a common target,
/// modulus the sup of the two pulled-back moduli. Throws ConstantComponent,
/// NonSmoothFiberProduct, UnsupportedCurve.
FiberProduct canonical_fiber_product(const AdmissibleMorphism& f1, const AdmissibleMorphism& f2);

/// The unique h: L -> P with p1 o h = g1 and p2 o h = g2, flags computed.
/// Throws InconsistentInput when the cone does not commute or no unique
/// component receives it.
AdmissibleMorphism factor_through(const FiberProduct& fp, const AdmissibleMorphism& g1, const AdmissibleMorphism& g2);

/// P(a(t), b(t)) as numerator/denominator (numerator may be zero).
std::pair<UniPoly, UniPoly> eval_on(const Poly& p, const RationalFunction& a, const RationalFunction& b);

} // namespace mvtop
