#pragma once

#include "mvtop/algebra/upoly.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mvtop {

/// Variable slots of a sparse polynomial. Printed and parsed as x, y, z, t.
inline constexpr int kMaxVars = 4;
inline constexpr int VX = 0;
inline constexpr int VY = 1;
inline constexpr int VZ = 2;
inline constexpr int VT = 3;

std::string var_name(int v);

using Exponent = std::array<int, kMaxVars>;

/// Sparse multivariate polynomial over Q. Terms are keyed by exponent
/// vectors in lexicographic order (x most significant), so the last term is
/// the lex-leading one.
class Poly {
public:
    using Terms = std::map<Exponent, Rat>;

    Poly() = default;
    Poly(const Rat& c); // NOLINT(google-explicit-constructor)
    Poly(long c);       // NOLINT(google-explicit-constructor)

    static Poly var(int v);
    static Poly monomial(const Rat& c, const Exponent& e);
    static Poly from_uni(const UniPoly& p, int v);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] int degree(int v) const;
    [[nodiscard]] int low_degree(int v) const;
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] bool involves(int v) const { return degree(v) > 0; }
    [[nodiscard]] const Rat& lead_coeff() const;
    [[nodiscard]] Rat constant_term() const;

    /// Coefficient of v^k as a polynomial in the remaining variables.
    [[nodiscard]] Poly coeff(int v, int k) const;
    /// Dense coefficient list in v (index = power).
    [[nodiscard]] std::vector<Poly> coeffs_in(int v) const;
    [[nodiscard]] static Poly from_coeffs(const std::vector<Poly>& cs, int v);

    [[nodiscard]] Poly eval(int v, const Rat& at) const;
    [[nodiscard]] Poly substitute(int v, const Poly& by) const;
    /// den^deg_v * P(v = num/den): the numerator of a rational substitution.
    [[nodiscard]] Poly substitute_fraction(int v, const Poly& num, const Poly& den) const;
    /// Same with the homogenizing power fixed to deg (>= degree(v)).
    [[nodiscard]] Poly substitute_fraction(int v, const Poly& num, const Poly& den, int deg) const;
    [[nodiscard]] Poly swap_vars(int a, int b) const;
    /// v^deg * P(1/v) for deg >= degree(v).
    [[nodiscard]] Poly reverse(int v, int deg) const;
    [[nodiscard]] Poly derivative(int v) const;
    [[nodiscard]] Poly pow(int e) const;

    /// Univariate view; the polynomial must involve no other variable.
    [[nodiscard]] UniPoly to_uni(int v) const;
    /// Integer coefficients with gcd 1 and positive lex-leading coefficient.
    [[nodiscard]] Poly primitive() const;
    [[nodiscard]] Poly monic() const;

    [[nodiscard]] std::string to_string() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

private:
    void add_term(const Exponent& e, const Rat& c);
    Terms terms_;
};

/// Exact quotient a / b if b divides a, otherwise nullopt.
std::optional<Poly> exact_div(const Poly& a, const Poly& b);

/// Sylvester resultant eliminating v (fraction-free Bareiss determinant).
/// Throws ZeroPolynomial, VariableAbsent.
Poly resultant(const Poly& f, const Poly& g, int v);

/// Parses polynomial text over variables x, y, z, t with + - * ^, parentheses
/// and rational constants (division allowed only by constants).
Poly parse_poly(const std::string& text);

/// Parses a quotient of polynomials; returns (numerator, denominator).
std::pair<Poly, Poly> parse_fraction(const std::string& text);

} // namespace mvtop
