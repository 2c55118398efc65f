#pragma once

#include "mvtop/algebra/upoly.hpp"

#include <vector>

namespace mvtop {

struct UniFactor {
    UniPoly factor; // monic, irreducible over Q
    int multiplicity = 1;
    friend bool operator==(const UniFactor&, const UniFactor&) = default;
};

inline constexpr int kFactorDegreeCap = 24;

/// Irreducible factorization over Q. Factors are sorted by degree, then by
/// coefficients from the top down. Throws ZeroPolynomial, DegreeCap.
std::vector<UniFactor> factor_uni(const UniPoly& p);

/// Same algorithm with an explicit degree cap (used by bivariate factoring).
std::vector<UniFactor> factor_uni_capped(const UniPoly& p, int cap);

/// Yun's algorithm: p = c * prod a_i^i with a_i monic, squarefree, coprime.
std::vector<UniFactor> squarefree_decomposition(const UniPoly& p);

/// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const UniPoly& p);

} // namespace mvtop
