#include "mvtop/curve/rational_map.hpp"

#include "mvtop/error.hpp"

namespace mvtop {

bool AmbientCurve::is_proper() const {
    for (const auto& c : components) {
        if (!c.deleted.empty()) {
            return false;
        }
    }
    return true;
}

ComponentMap::ComponentMap(int target, RationalFunction f) : target_(target), f_(std::move(f)) {
    if (f_.is_constant()) {
        constant_ = f_.constant_place();
    }
}

ComponentMap ComponentMap::constant_at(int target, const Place& p) {
    ComponentMap m;
    m.target_ = target;
    m.f_ = p.is_rational() && !p.is_infinity() ? RationalFunction::constant(p.value())
                                                : RationalFunction::constant(0);
    m.constant_ = p;
    return m;
}

Place ComponentMap::image(const Place& p) const {
    if (constant_) {
        return *constant_;
    }
    return f_.image(p);
}

std::string ComponentMap::to_string() const {
    std::string body = constant_ ? "const " + constant_->to_string() : f_.to_string();
    return std::to_string(target_) + ": " + body;
}

RationalMap RationalMap::identity(std::size_t components) {
    RationalMap m;
    for (std::size_t i = 0; i < components; ++i) {
        m.parts.emplace_back(static_cast<int>(i), RationalFunction::identity());
    }
    return m;
}

RationalMap RationalMap::compose(const RationalMap& inner) const {
    RationalMap out;
    for (const auto& f : inner.parts) {
        auto t = static_cast<std::size_t>(f.target());
        if (t >= parts.size()) {
            fail(ErrorKind::InvalidArgument, "composition: target component out of range");
        }
        const ComponentMap& g = parts[t];
        if (f.is_constant()) {
            out.parts.push_back(ComponentMap::constant_at(g.target(), g.image(f.constant())));
        } else if (g.is_constant()) {
            out.parts.push_back(ComponentMap::constant_at(g.target(), g.constant()));
        } else {
            out.parts.emplace_back(g.target(), g.function().compose(f.function()));
        }
    }
    return out;
}

bool RationalMap::is_identity() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].target() != static_cast<int>(i) || parts[i].is_constant() ||
            !parts[i].function().is_identity()) {
            return false;
        }
    }
    return true;
}

Divisor pullback_divisor(const ComponentMap& f, const Divisor& d) {
    if (f.is_constant()) {
        if (d.contains(f.constant())) {
            fail(ErrorKind::ConstantMapOverSupport,
                 "constant map to " + f.constant().to_string() + " lands in the divisor support");
        }
        return {};
    }
    return pullback_divisor(f.function(), d);
}

MultiDivisor pullback_divisor(const RationalMap& f, const MultiDivisor& d) {
    MultiDivisor out;
    for (const auto& part : f.parts) {
        auto t = static_cast<std::size_t>(part.target());
        if (t >= d.size()) {
            fail(ErrorKind::InvalidArgument, "pullback: target component out of range");
        }
        out.push_back(pullback_divisor(part, d[t]));
    }
    return out;
}

MultiDivisor ramification_divisor(const RationalMap& f) {
    MultiDivisor out;
    for (const auto& part : f.parts) {
        if (part.is_constant()) {
            fail(ErrorKind::ConstantComponent, "ramification of a constant component");
        }
        out.push_back(ramification_divisor(part.function()));
    }
    return out;
}

MultiDivisor sup_divisor(const MultiDivisor& a, const MultiDivisor& b) {
    if (a.size() != b.size()) {
        fail(ErrorKind::InvalidArgument, "sup of divisors on different curves");
    }
    MultiDivisor out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(sup_divisor(a[i], b[i]));
    }
    return out;
}

bool leq(const MultiDivisor& a, const MultiDivisor& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!leq(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

std::string to_string(const MultiDivisor& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        s += (i ? "; " : "") + d[i].to_string();
    }
    return s + ")";
}

} // namespace mvtop
