#pragma once

#include "mvtop/algebra/poly.hpp"
#include "mvtop/modulus/modulus_pair.hpp"

#include <map>
#include <string>
#include <vector>

namespace mvtop {

/// Irreducible curve F(x, y) in (source coordinate, target coordinate)
/// between one source and one target component.
struct ElemCorr {
    std::size_t source = 0;
    std::size_t target = 0;
    Poly f; // primitive, positive lex-leading coefficient

    /// Normalizes F; throws InvalidArgument unless F is irreducible with
    /// positive degree in y.
    static ElemCorr make(std::size_t source, std::size_t target, const Poly& f);

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ElemCorr&, const ElemCorr&) = default;
    friend std::strong_ordering operator<=>(const ElemCorr& a, const ElemCorr& b);
};

/// b(x) y - a(x) for f = a / b.
ElemCorr graph(std::size_t source, const ComponentMap& f);

struct BranchCheck {
    Place source_place;
    Place target_place;
    Rat slope;        // valuation of the target place along the worst branch, in source units
    int source_mult = 0;
    int target_mult = 0;
    bool puiseux = false; // false: resultant polygon
};

enum class ValuationRoute { Auto, Polygon, Puiseux };

struct ElemAdmissibility {
    bool admissible = false;
    std::vector<BranchCheck> checks;
    std::string detail;
};

/// pr1* M >= pr2* N on the normalized closure. Throws InvalidArgument when
/// an interior source point reaches the target boundary.
ElemAdmissibility elem_admissibility(const ElemCorr& v, const ModulusPair& m, const ModulusPair& n,
                                     ValuationRoute route = ValuationRoute::Auto);
bool check_elem_admissible(const ElemCorr& v, const ModulusPair& m, const ModulusPair& n);

/// Finite integer combination with nonzero coefficients.
struct Corr {
    std::map<ElemCorr, long> terms;

    Corr() = default;
    Corr(const ElemCorr& v, long n = 1); // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool is_zero() const { return terms.empty(); }
    void add(const ElemCorr& v, long n);
    [[nodiscard]] std::string to_string() const;

    friend Corr operator+(Corr a, const Corr& b);
    friend Corr operator-(Corr a, const Corr& b);
    friend Corr operator*(long k, Corr a);
    friend bool operator==(const Corr&, const Corr&) = default;
};

struct PushForward {
    ElemCorr image;
    int degree = 1;
};

/// Image of V under g: N -> L with its generic covering degree. The image is
/// re-checked admissible from m to L (InconsistentInput otherwise).
PushForward push_forward(const AdmissibleMorphism& g, const ElemCorr& v, const ModulusPair& m);

/// Sum n_i V_i -> Sum n_i deg_i g(V_i).
Corr push_forward_linear(const AdmissibleMorphism& g, const Corr& alpha, const ModulusPair& m);

} // namespace mvtop
