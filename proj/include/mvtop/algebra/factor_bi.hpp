#pragma once

#include "mvtop/algebra/poly.hpp"

#include <vector>

namespace mvtop {

struct PolyFactor {
    Poly factor; // primitive integer coefficients, positive lex-leading coefficient
    int multiplicity = 1;
    friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Irreducible factorization over Q of a polynomial in at most two
/// variables (any two slots). Constant factors are dropped; the product of
/// the factors equals the input up to a rational unit. Sorted ascending.
/// Throws ZeroPolynomial, DegreeCap.
std::vector<PolyFactor> factor_bi(const Poly& f);

/// Irreducibility over Q for a polynomial in at most two variables. A
/// specialization certificate is tried before full factorization.
bool is_irreducible(const Poly& f);

/// Variables occurring in f, ascending.
std::vector<int> variables_of(const Poly& f);

/// Squarefree as a polynomial in v over the field of the other variables.
bool is_squarefree_in(const Poly& f, int v);

} // namespace mvtop
