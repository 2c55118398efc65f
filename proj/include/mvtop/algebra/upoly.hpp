#pragma once

#include "mvtop/algebra/rat.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace mvtop {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// lowest degree first; the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    UniPoly(const Rat& constant); // NOLINT(google-explicit-constructor)
    UniPoly(long constant);       // NOLINT(google-explicit-constructor)

    static UniPoly x();
    static UniPoly monomial(const Rat& c, int degree);
    /// x - root
    static UniPoly linear_root(const Rat& root);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rat coeff(int i) const;
    [[nodiscard]] const Rat& lc() const;

    [[nodiscard]] Rat eval(const Rat& at) const;
    [[nodiscard]] UniPoly derivative() const;
    [[nodiscard]] UniPoly monic() const;
    [[nodiscard]] UniPoly compose(const UniPoly& inner) const;
    [[nodiscard]] UniPoly pow(int exponent) const;
    /// x^deg * p(1/x) for deg >= degree().
    [[nodiscard]] UniPoly reversed(int deg) const;
    /// Scales so the coefficients are coprime integers with positive leading
    /// coefficient.
    [[nodiscard]] UniPoly primitive() const;
    [[nodiscard]] std::vector<Int> integer_coeffs() const;

    /// Largest k with irreducible^k dividing *this.
    [[nodiscard]] int multiplicity_of(const UniPoly& irreducible) const;

    [[nodiscard]] std::string to_string(const std::string& var = "x") const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rat& c, const UniPoly& a);
    friend UniPoly operator-(const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;
    /// Total order: degree first, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const UniPoly& a, const UniPoly& b);

    UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
    UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
    UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Monic g = gcd(a,b) together with s, t such that s*a + t*b = g.
struct ExtendedGcd {
    UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

UniPoly from_integers(const std::vector<Int>& coeffs);

} // namespace mvtop
