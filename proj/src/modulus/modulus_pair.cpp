#include "mvtop/modulus/modulus_pair.hpp"

#include "mvtop/error.hpp"

namespace mvtop {

ModulusPair ModulusPair::single(Divisor d, std::set<Place> deleted, std::string label) {
    ModulusPair m;
    m.ambient.components.push_back({std::move(label), std::move(deleted)});
    m.modulus.push_back(std::move(d));
    m.validate();
    return m;
}

std::set<Place> ModulusPair::boundary(std::size_t i) const {
    std::set<Place> b = deleted(i);
    for (const auto& [p, m] : modulus[i].terms()) {
        b.insert(p);
    }
    return b;
}

bool ModulusPair::in_interior(std::size_t i, const Place& p) const {
    return !modulus[i].contains(p) && deleted(i).count(p) == 0;
}

void ModulusPair::validate() const {
    if (modulus.size() != ambient.size()) {
        fail(ErrorKind::InvalidArgument, "modulus pair: divisor count does not match component count");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        for (const auto& p : deleted(i)) {
            if (modulus[i].contains(p)) {
                fail(ErrorKind::InvalidArgument, "modulus meets deleted place " + p.to_string());
            }
        }
    }
}

std::string ModulusPair::to_string() const {
    if (is_empty()) {
        return "empty";
    }
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) {
            s += " | ";
        }
        if (!ambient.components[i].label.empty()) {
            s += ambient.components[i].label + ": ";
        }
        s += modulus[i].to_string();
        if (!deleted(i).empty()) {
            s += " minus {";
            bool first = true;
            for (const auto& p : deleted(i)) {
                s += (first ? "" : ", ") + p.to_string();
                first = false;
            }
            s += "}";
        }
    }
    return s;
}

bool ModulusPair::same_as(const ModulusPair& other) const {
    if (size() != other.size() || modulus != other.modulus) {
        return false;
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (deleted(i) != other.deleted(i)) {
            return false;
        }
    }
    return true;
}

AdmissibilityReport check_admissible(const RationalMap& f, const ModulusPair& m, const ModulusPair& n) {
    if (f.size() != m.size()) {
        fail(ErrorKind::InvalidArgument, "map has " + std::to_string(f.size()) + " components, source has " +
                                             std::to_string(m.size()));
    }
    AdmissibilityReport r;
    r.admissible = true;
    r.ambient = true;
    r.minimal = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const ComponentMap& part = f[i];
        auto j = static_cast<std::size_t>(part.target());
        if (j >= n.size()) {
            fail(ErrorKind::InvalidArgument, "map target component out of range");
        }
        Divisor pb;
        if (part.is_constant()) {
            if (!n.in_interior(j, part.constant())) {
                fail(ErrorKind::InteriorViolation, "component " + std::to_string(i) + " is constant at boundary place " +
                                                       part.constant().to_string());
            }
        } else {
            for (const Place& q : n.boundary(j)) {
                bool deleted_target = n.deleted(j).count(q) != 0;
                for (const auto& [p, e] : part.function().preimage(q)) {
                    if (m.in_interior(i, p)) {
                        fail(ErrorKind::InteriorViolation, "interior place " + p.to_string() + " of component " +
                                                               std::to_string(i) + " maps to boundary place " +
                                                               q.to_string());
                    }
                    bool deleted_source = m.deleted(i).count(p) != 0;
                    if (deleted_target && !deleted_source) {
                        fail(ErrorKind::NonProperSource, "place " + p.to_string() + " of component " +
                                                             std::to_string(i) + " maps to deleted place " +
                                                             q.to_string());
                    }
                    if (!deleted_source && !deleted_target) {
                        pb.add(p, e * n.divisor(j).mult(q));
                    }
                }
            }
        }
        if (!leq(pb, m.divisor(i))) {
            r.admissible = false;
            r.minimal = false;
            if (r.detail.empty()) {
                r.detail = "component " + std::to_string(i) + ": pullback " + pb.to_string() + " exceeds " +
                           m.divisor(i).to_string();
            }
        } else if (pb != m.divisor(i)) {
            r.minimal = false;
        }
        r.pullback.push_back(std::move(pb));
    }
    return r;
}

AdmissibleMorphism AdmissibleMorphism::make(ModulusPair source, ModulusPair target, RationalMap map) {
    AdmissibilityReport flags = check_admissible(map, source, target);
    return {std::move(source), std::move(target), std::move(map), std::move(flags)};
}

AdmissibleMorphism AdmissibleMorphism::identity(const ModulusPair& m) {
    return make(m, m, RationalMap::identity(m.size()));
}

AdmissibleMorphism AdmissibleMorphism::after(const AdmissibleMorphism& inner) const {
    return make(inner.source, target, map.compose(inner.map));
}

DisjointUnion disjoint_union(const ModulusPair& m, const ModulusPair& n) {
    ModulusPair u = m;
    for (std::size_t i = 0; i < n.size(); ++i) {
        u.ambient.components.push_back(n.ambient.components[i]);
        u.modulus.push_back(n.modulus[i]);
    }
    RationalMap in1 = RationalMap::identity(m.size());
    RationalMap in2;
    for (std::size_t i = 0; i < n.size(); ++i) {
        in2.parts.emplace_back(static_cast<int>(m.size() + i), RationalFunction::identity());
    }
    return {u, AdmissibleMorphism::make(m, u, in1), AdmissibleMorphism::make(n, u, in2)};
}

bool is_interior_open_immersion(const RationalMap& f) {
    std::set<int> hit;
    for (const auto& part : f.parts) {
        if (part.is_constant() || !part.function().is_mobius() || !hit.insert(part.target()).second) {
            return false;
        }
    }
    return true;
}

bool is_isomorphism(const RationalMap& f, const ModulusPair& m, const ModulusPair& n) {
    if (f.size() != m.size() || m.size() != n.size() || !is_interior_open_immersion(f)) {
        return false;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        const RationalFunction& g = f[i].function();
        auto j = static_cast<std::size_t>(f[i].target());
        if (j >= n.size()) {
            return false;
        }
        std::set<Place> img;
        for (const auto& p : m.deleted(i)) {
            img.insert(g.image(p));
        }
        if (img != n.deleted(j) || pullback_divisor(g, n.divisor(j)) != m.divisor(i)) {
            return false;
        }
    }
    return true;
}

} // namespace mvtop
