#pragma once

#include "mvtop/squares/mv.hpp"
#include "mvtop/transfers/correspondence.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mvtop {

inline constexpr const char* kScenarioSchema = "mvtop/1";

struct NamedCorr {
    ElemCorr v;
    std::optional<ModulusPair> from; // for check-admissible
    std::optional<ModulusPair> to;
    std::string from_ref;
    std::string to_ref;
};

struct FiberTask {
    std::string left;
    std::string right;
};

/// Exactly one of square / cover is set.
struct BaseChangeTask {
    std::string square;
    std::string cover;
    std::string along;
};

struct GlueTask {
    std::string square;
    std::string f; // T10 -> L
    std::string g; // T01 -> L
};

struct LiftTask {
    std::string square;
    std::string source;
    std::vector<std::pair<std::string, long>> alpha; // into T01
    std::vector<std::pair<std::string, long>> beta;  // into T10
};

struct OracleTask {
    std::string square;
    std::string source;
};

struct Scenario {
    std::map<std::string, ModulusPair> pairs;
    std::map<std::string, AdmissibleMorphism> morphisms;
    std::map<std::string, BuiltSquare> squares;
    std::map<std::string, NamedCorr> correspondences;

    std::vector<FiberTask> fiber_products;
    std::vector<std::string> off_diagonals;
    std::vector<BaseChangeTask> base_changes;
    std::vector<GlueTask> glues;
    std::vector<LiftTask> lifts;
    std::vector<OracleTask> oracles;

    /// "name" or "square.00" / "square.01" / "square.10" / "square.11".
    [[nodiscard]] const ModulusPair& pair(const std::string& ref) const;
    /// "name" or "square.u" / ".p" / ".v" / ".q".
    [[nodiscard]] const AdmissibleMorphism& morphism(const std::string& ref) const;
    [[nodiscard]] const BuiltSquare& square(const std::string& ref) const;
    [[nodiscard]] Corr corr(const std::vector<std::pair<std::string, long>>& terms) const;
};

/// Strict: unknown fields are rejected. Errors carry "origin:line:column"
/// and keep their kind (ParseError for syntax and schema problems).
Scenario parse_scenario(const std::string& text, const std::string& origin = "<scenario>");

Scenario load_scenario(const std::string& path);

} // namespace mvtop
