#pragma once

#include "mvtop/curve/rational_function.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mvtop {

struct Component {
    std::string label;
    std::set<Place> deleted;
};

/// Disjoint union of copies of P^1, each with finitely many places removed.
struct AmbientCurve {
    std::vector<Component> components;

    [[nodiscard]] std::size_t size() const { return components.size(); }
    [[nodiscard]] bool is_proper() const;
};

using MultiDivisor = std::vector<Divisor>;

/// One component's worth of a map: a rational function into component
/// `target`, or a constant closed point.
class ComponentMap {
public:
    ComponentMap() = default;
    ComponentMap(int target, RationalFunction f);
    static ComponentMap constant_at(int target, const Place& p);

    [[nodiscard]] int target() const { return target_; }
    [[nodiscard]] const RationalFunction& function() const { return f_; }
    [[nodiscard]] bool is_constant() const { return constant_.has_value(); }
    [[nodiscard]] const Place& constant() const { return *constant_; }
    [[nodiscard]] Place image(const Place& p) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ComponentMap&, const ComponentMap&) = default;

private:
    int target_ = 0;
    RationalFunction f_;
    std::optional<Place> constant_;
};

struct RationalMap {
    std::vector<ComponentMap> parts;

    static RationalMap identity(std::size_t components);
    [[nodiscard]] std::size_t size() const { return parts.size(); }
    [[nodiscard]] const ComponentMap& operator[](std::size_t i) const { return parts[i]; }
    /// this o inner
    [[nodiscard]] RationalMap compose(const RationalMap& inner) const;
    [[nodiscard]] bool is_identity() const;

    friend bool operator==(const RationalMap&, const RationalMap&) = default;
};

Divisor pullback_divisor(const ComponentMap& f, const Divisor& d);
MultiDivisor pullback_divisor(const RationalMap& f, const MultiDivisor& d);
MultiDivisor ramification_divisor(const RationalMap& f);

MultiDivisor sup_divisor(const MultiDivisor& a, const MultiDivisor& b);
bool leq(const MultiDivisor& a, const MultiDivisor& b);
std::string to_string(const MultiDivisor& d);

} // namespace mvtop
