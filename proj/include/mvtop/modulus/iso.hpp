#pragma once

#include "mvtop/modulus/modulus_pair.hpp"

#include <functional>
#include <optional>

namespace mvtop {

/// Mobius transformation sending s[k] to t[k] (k = 0, 1, 2); points are
/// rational places. nullopt when either triple has a repeated point.
std::optional<RationalFunction> mobius_from_triples(const std::array<Place, 3>& s, const std::array<Place, 3>& t);

enum class IsoStatus { Found, ProvenNone, Inconclusive };

std::string to_string(IsoStatus s);

struct IsoResult {
    IsoStatus status = IsoStatus::ProvenNone;
    RationalMap map;
    long candidates = 0;
    std::string detail;

    [[nodiscard]] bool found() const { return status == IsoStatus::Found; }
};

struct IsoOptions {
    /// Extra per-component test (source component, target component, map).
    std::function<bool(std::size_t, std::size_t, const RationalFunction&)> accept;
    /// When set, the isomorphism must commute with maps to a common base:
    /// over_target o phi = over_source.
    const RationalMap* over_source = nullptr;
    const RationalMap* over_target = nullptr;
    long cap = 5000;
};

IsoResult iso_modulus_pairs(const ModulusPair& m, const ModulusPair& n, const IsoOptions& options = {});

} // namespace mvtop
