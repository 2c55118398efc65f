#include "mvtop/squares/sheaf.hpp"

#include "mvtop/error.hpp"

#include <algorithm>
#include <map>

namespace mvtop {

SheafReport sheaf_check_finite_presheaf(const PresheafTable& t) {
    auto check = [](const std::vector<std::size_t>& m, std::size_t from, std::size_t to, const char* name) {
        if (m.size() != from) {
            fail(ErrorKind::MalformedTable, std::string("map along ") + name + " has the wrong length");
        }
        for (auto x : m) {
            if (x >= to) {
                fail(ErrorKind::MalformedTable, std::string("map along ") + name + " leaves its target");
            }
        }
    };
    check(t.along_u, t.f11, t.f10, "u");
    check(t.along_p, t.f11, t.f01, "p");
    check(t.along_v, t.f01, t.f00, "v");
    check(t.along_q, t.f10, t.f00, "q");
    for (std::size_t s = 0; s < t.f11; ++s) {
        if (t.along_q[t.along_u[s]] != t.along_v[t.along_p[s]]) {
            fail(ErrorKind::MalformedTable, "restriction maps do not commute");
        }
    }
    if (t.empty_size != 1) {
        return {false, "F(empty) has " + std::to_string(t.empty_size) + " elements"};
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hits;
    for (std::size_t s = 0; s < t.f11; ++s) {
        if (++hits[{t.along_u[s], t.along_p[s]}] > 1) {
            return {false, "F(11) -> fiber product is not injective"};
        }
    }
    std::size_t fiber = 0;
    for (std::size_t a = 0; a < t.f10; ++a) {
        for (std::size_t b = 0; b < t.f01; ++b) {
            if (t.along_q[a] == t.along_v[b]) {
                ++fiber;
            }
        }
    }
    if (fiber != t.f11) {
        return {false, "F(11) has " + std::to_string(t.f11) + " elements, the fiber product " +
                           std::to_string(fiber)};
    }
    return {true, ""};
}

namespace {

std::vector<RationalFunction> mobius_family(int height) {
    std::vector<RationalFunction> out;
    for (int a = -height; a <= height; ++a) {
        for (int b = -height; b <= height; ++b) {
            for (int c = -height; c <= height; ++c) {
                for (int d = -height; d <= height; ++d) {
                    if (a * d - b * c != 0) {
                        out.push_back(RationalFunction::mobius(a, b, c, d));
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// all assignments component -> (target component, family member) that are admissible
std::vector<RationalMap> homs(const ModulusPair& src, const ModulusPair& l, const std::vector<RationalFunction>& fam) {
    std::vector<RationalMap> out{RationalMap{}};
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::vector<RationalMap> next;
        for (const auto& partial : out) {
            for (std::size_t j = 0; j < l.size(); ++j) {
                for (const auto& f : fam) {
                    ModulusPair one;
                    one.ambient.components.push_back(src.ambient.components[i]);
                    one.modulus.push_back(src.modulus[i]);
                    RationalMap m;
                    m.parts.emplace_back(static_cast<int>(j), f);
                    try {
                        if (!check_admissible(m, one, l).admissible) {
                            continue;
                        }
                    } catch (const Error&) {
                        continue;
                    }
                    RationalMap ext = partial;
                    ext.parts.push_back(m.parts[0]);
                    next.push_back(std::move(ext));
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<std::size_t> restriction(const std::vector<RationalMap>& from, const std::vector<RationalMap>& to,
                                     const RationalMap& edge) {
    std::vector<std::size_t> out;
    for (const auto& h : from) {
        RationalMap r = h.compose(edge);
        auto it = std::find(to.begin(), to.end(), r);
        if (it == to.end()) {
            fail(ErrorKind::MalformedTable, "restriction leaves the bounded family");
        }
        out.push_back(static_cast<std::size_t>(it - to.begin()));
    }
    return out;
}

} // namespace

PresheafTable representable_table(const MSquare& t, const ModulusPair& l, int height) {
    std::vector<RationalFunction> fam = mobius_family(height);
    auto h00 = homs(t.t00(), l, fam);
    auto h01 = homs(t.t01(), l, fam);
    auto h10 = homs(t.t10(), l, fam);
    auto h11 = homs(t.t11(), l, fam);
    PresheafTable tab;
    tab.empty_size = 1; // the empty map
    tab.f00 = h00.size();
    tab.f01 = h01.size();
    tab.f10 = h10.size();
    tab.f11 = h11.size();
    tab.along_u = restriction(h11, h10, t.u.map);
    tab.along_p = restriction(h11, h01, t.p.map);
    tab.along_v = restriction(h01, h00, t.v.map);
    tab.along_q = restriction(h10, h00, t.q.map);
    return tab;
}

} // namespace mvtop
