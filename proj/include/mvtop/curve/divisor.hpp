#pragma once

#include "mvtop/curve/place.hpp"

#include <map>
#include <set>
#include <string>

namespace mvtop {

/// Effective divisor on P^1: places with positive multiplicities.
class Divisor {
public:
    using Map = std::map<Place, int>;

    Divisor() = default;
    static Divisor point(const Place& p, int mult = 1);

    [[nodiscard]] const Map& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] int mult(const Place& p) const;
    [[nodiscard]] std::set<Place> support() const;
    /// Sum of multiplicity times residue degree.
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool contains(const Place& p) const { return terms_.count(p) != 0; }

    /// Adds m (may be negative as long as the result stays effective).
    void add(const Place& p, int m);
    void set(const Place& p, int m);
    /// Drops the given places.
    [[nodiscard]] Divisor without(const std::set<Place>& places) const;
    [[nodiscard]] Divisor scaled(int k) const;

    /// "[x - 1]^2 + [inf]"; "0" for the zero divisor.
    [[nodiscard]] std::string to_string() const;

    friend Divisor operator+(const Divisor& a, const Divisor& b);
    friend bool operator==(const Divisor&, const Divisor&) = default;
    friend auto operator<=>(const Divisor&, const Divisor&) = default;

private:
    Map terms_;
};

Divisor sup_divisor(const Divisor& a, const Divisor& b);
Divisor inf_divisor(const Divisor& a, const Divisor& b);
/// Place-wise a <= b.
bool leq(const Divisor& a, const Divisor& b);

/// Parses "[x]^2 + [x - 1] + [inf]^3"; "0" or "" is the zero divisor.
/// Multiplicities must be positive; repeated places add up.
Divisor parse_divisor(const std::string& text);

} // namespace mvtop
