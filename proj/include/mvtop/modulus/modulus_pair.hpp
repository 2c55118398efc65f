#pragma once

#include "mvtop/curve/rational_map.hpp"

#include <string>
#include <vector>

namespace mvtop {

/// Finite disjoint union of copies of P^1 minus deleted places, each with an
/// effective divisor supported away from the deleted places.
struct ModulusPair {
    AmbientCurve ambient;
    MultiDivisor modulus;

    static ModulusPair empty() { return {}; }
    static ModulusPair single(Divisor d, std::set<Place> deleted = {}, std::string label = "");

    [[nodiscard]] std::size_t size() const { return ambient.size(); }
    [[nodiscard]] bool is_empty() const { return ambient.components.empty(); }
    [[nodiscard]] bool is_proper() const { return ambient.is_proper(); }
    [[nodiscard]] const Divisor& divisor(std::size_t i) const { return modulus[i]; }
    [[nodiscard]] const std::set<Place>& deleted(std::size_t i) const { return ambient.components[i].deleted; }
    /// Modulus support plus deleted places of component i.
    [[nodiscard]] std::set<Place> boundary(std::size_t i) const;
    [[nodiscard]] bool in_interior(std::size_t i, const Place& p) const;
    /// Throws InvalidArgument when the modulus meets a deleted place.
    void validate() const;
    [[nodiscard]] std::string to_string() const;

    /// Structural equality; labels are ignored.
    [[nodiscard]] bool same_as(const ModulusPair& other) const;
};

struct AdmissibilityReport {
    bool admissible = false;
    bool ambient = false;
    bool minimal = false;
    /// f* N^inf restricted to the non-deleted locus of the source.
    MultiDivisor pullback;
    std::string detail;
};

/// Throws InteriorViolation when an interior place lands on the target
/// boundary and NonProperSource when a non-deleted place lands on a deleted one.
AdmissibilityReport check_admissible(const RationalMap& f, const ModulusPair& m, const ModulusPair& n);

struct AdmissibleMorphism {
    ModulusPair source;
    ModulusPair target;
    RationalMap map;
    AdmissibilityReport flags;

    /// Computes the flags; they are never taken on trust.
    static AdmissibleMorphism make(ModulusPair source, ModulusPair target, RationalMap map);
    static AdmissibleMorphism identity(const ModulusPair& m);

    [[nodiscard]] bool admissible() const { return flags.admissible; }
    [[nodiscard]] bool minimal() const { return flags.minimal; }
    /// this o inner, flags recomputed.
    [[nodiscard]] AdmissibleMorphism after(const AdmissibleMorphism& inner) const;
};

struct DisjointUnion {
    ModulusPair pair;
    AdmissibleMorphism first;
    AdmissibleMorphism second;
};

DisjointUnion disjoint_union(const ModulusPair& m, const ModulusPair& n);

/// Componentwise Mobius, bijective on components, deleted places carried
/// onto deleted places and modulus pulled back exactly.
bool is_isomorphism(const RationalMap& f, const ModulusPair& m, const ModulusPair& n);

/// Interior open immersion: componentwise Mobius and injective on components.
bool is_interior_open_immersion(const RationalMap& f);

} // namespace mvtop
