#include "mvtop/modulus/iso.hpp"

#include "mvtop/error.hpp"

#include <algorithm>
#include <map>

namespace mvtop {

namespace {

using Matrix = std::array<Rat, 4>; // a b / c d acting on (x : 1)

std::pair<Rat, Rat> homog(const Place& p) {
    return p.is_infinity() ? std::pair<Rat, Rat>{1, 0} : std::pair<Rat, Rat>{p.value(), 1};
}

// s0 -> 0, s1 -> inf, s2 -> 1
std::optional<Matrix> normalizer(const std::array<Place, 3>& s) {
    auto [u1, v1] = homog(s[0]);
    auto [u2, v2] = homog(s[1]);
    auto [u3, v3] = homog(s[2]);
    Rat a = u3 * v1 - v3 * u1;
    Rat b = u3 * v2 - v3 * u2;
    if (a == 0 || b == 0 || u1 * v2 - v1 * u2 == 0) {
        return std::nullopt;
    }
    Rat lambda = b / a;
    return Matrix{lambda * v1, -lambda * u1, v2, -u2};
}

Matrix mul(const Matrix& x, const Matrix& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

Matrix adjugate(const Matrix& x) { return {x[3], -x[1], -x[2], x[0]}; }

// marking of a place on a component: modulus multiplicity, or 0 for deleted
using Marking = std::map<Place, int>;

Marking marking(const ModulusPair& m, std::size_t i) {
    Marking out;
    for (const auto& [p, k] : m.divisor(i).terms()) {
        out[p] = k;
    }
    for (const auto& p : m.deleted(i)) {
        out[p] = 0;
    }
    return out;
}

std::vector<std::pair<int, int>> signature(const Marking& mk) {
    std::vector<std::pair<int, int>> sig;
    for (const auto& [p, k] : mk) {
        sig.emplace_back(k, p.degree());
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

bool transports(const RationalFunction& phi, const ModulusPair& m, std::size_t i, const ModulusPair& n,
                std::size_t j) {
    if (pullback_divisor(phi, n.divisor(j)) != m.divisor(i)) {
        return false;
    }
    std::set<Place> img;
    for (const auto& p : m.deleted(i)) {
        img.insert(phi.image(p));
    }
    return img == n.deleted(j);
}

std::vector<Place> rational_points(const Marking& mk) {
    std::vector<Place> out;
    for (const auto& [p, k] : mk) {
        if (p.is_rational()) {
            out.push_back(p);
        }
    }
    return out;
}

struct PairSearch {
    IsoStatus status = IsoStatus::ProvenNone;
    RationalFunction phi;
};

class Searcher {
public:
    Searcher(const ModulusPair& m, const ModulusPair& n, const IsoOptions& o) : m_(m), n_(n), o_(o) {}

    long candidates = 0;
    bool exhausted = false;

    PairSearch search(std::size_t i, std::size_t j) {
        Marking a = marking(m_, i);
        Marking b = marking(n_, j);
        if (signature(a) != signature(b)) {
            return {};
        }
        if (o_.over_source != nullptr) {
            return over_base(i, j, a, b);
        }
        std::vector<Place> ra = rational_points(a);
        std::vector<Place> rb = rational_points(b);
        bool all_rational = ra.size() == a.size();
        std::vector<Place> src = ra;
        std::vector<Place> pool = rb;
        bool complete = ra.size() >= 3 || (all_rational && !o_.accept);
        for (const char* extra : {"0", "1", "-1", "2", "inf", "1/2", "-2", "3"}) {
            Place p = extra == std::string("inf") ? Place::infinity() : Place::rational(parse_rat(extra));
            if (src.size() < 3 && a.count(p) == 0) {
                src.push_back(p);
            }
            if (ra.size() < 3 && b.count(p) == 0) {
                pool.push_back(p);
            }
        }
        src.resize(3, Place::infinity());
        PairSearch r = triples(i, j, {src[0], src[1], src[2]}, pool, pool, pool, a, b);
        if (r.status != IsoStatus::Found && !complete) {
            r.status = IsoStatus::Inconclusive;
        }
        return r;
    }

private:
    const ModulusPair& m_;
    const ModulusPair& n_;
    const IsoOptions& o_;

    bool consistent(const Place& s, const Place& t, const Marking& a, const Marking& b) const {
        auto ia = a.find(s);
        auto ib = b.find(t);
        if ((ia == a.end()) != (ib == b.end())) {
            return false;
        }
        return ia == a.end() || ia->second == ib->second;
    }

    PairSearch triples(std::size_t i, std::size_t j, const std::array<Place, 3>& s, const std::vector<Place>& c0,
                       const std::vector<Place>& c1, const std::vector<Place>& c2, const Marking& a,
                       const Marking& b) {
        for (const auto& t0 : c0) {
            if (!consistent(s[0], t0, a, b)) {
                continue;
            }
            for (const auto& t1 : c1) {
                if (t1 == t0 || !consistent(s[1], t1, a, b)) {
                    continue;
                }
                for (const auto& t2 : c2) {
                    if (t2 == t0 || t2 == t1 || !consistent(s[2], t2, a, b)) {
                        continue;
                    }
                    if (++candidates > o_.cap) {
                        exhausted = true;
                        return {IsoStatus::Inconclusive, {}};
                    }
                    auto phi = mobius_from_triples(s, {t0, t1, t2});
                    if (!phi || !transports(*phi, m_, i, n_, j)) {
                        continue;
                    }
                    if (o_.over_source != nullptr &&
                        (*o_.over_target)[j].function().compose(*phi) != (*o_.over_source)[i].function()) {
                        continue;
                    }
                    if (o_.accept && !o_.accept(i, j, *phi)) {
                        continue;
                    }
                    return {IsoStatus::Found, *phi};
                }
            }
        }
        return {};
    }

    PairSearch over_base(std::size_t i, std::size_t j, const Marking& a, const Marking& b) {
        const ComponentMap& fa = (*o_.over_source)[i];
        const ComponentMap& fb = (*o_.over_target)[j];
        if (fa.target() != fb.target()) {
            return {};
        }
        if (fa.is_constant() || fb.is_constant()) {
            fail(ErrorKind::ConstantComponent, "isomorphism search over a constant base map");
        }
        // any rational point s has phi(s) among the rational preimages of fa(s) under fb
        std::vector<Place> src;
        std::vector<std::vector<Place>> cand;
        std::vector<Place> probe = rational_points(a);
        for (long k = 0; probe.size() < 12; ++k) {
            probe.push_back(Place::rational(k % 2 ? Rat(-(k + 1) / 2) : Rat(k / 2)));
        }
        probe.push_back(Place::infinity());
        for (const auto& s : probe) {
            if (src.size() == 3) {
                break;
            }
            if (std::find(src.begin(), src.end(), s) != src.end()) {
                continue;
            }
            std::vector<Place> t;
            for (const auto& [p, e] : fb.function().preimage(fa.function().image(s))) {
                if (p.is_rational()) {
                    t.push_back(p);
                }
            }
            src.push_back(s);
            cand.push_back(t);
        }
        return triples(i, j, {src[0], src[1], src[2]}, cand[0], cand[1], cand[2], a, b);
    }
};

} // namespace

std::optional<RationalFunction> mobius_from_triples(const std::array<Place, 3>& s, const std::array<Place, 3>& t) {
    for (const auto& p : s) {
        if (!p.is_rational()) {
            return std::nullopt;
        }
    }
    for (const auto& p : t) {
        if (!p.is_rational()) {
            return std::nullopt;
        }
    }
    auto a = normalizer(s);
    auto b = normalizer(t);
    if (!a || !b) {
        return std::nullopt;
    }
    Matrix g = mul(adjugate(*b), *a);
    return RationalFunction::mobius(g[0], g[1], g[2], g[3]);
}

std::string to_string(IsoStatus s) {
    switch (s) {
    case IsoStatus::Found: return "found";
    case IsoStatus::ProvenNone: return "none";
    case IsoStatus::Inconclusive: return "exhausted";
    }
    return "?";
}

IsoResult iso_modulus_pairs(const ModulusPair& m, const ModulusPair& n, const IsoOptions& options) {
    IsoResult out;
    if (m.size() != n.size()) {
        out.detail = "component counts differ";
        return out;
    }
    Searcher searcher(m, n, options);
    std::size_t k = m.size();
    std::vector<std::vector<PairSearch>> table(k, std::vector<PairSearch>(k));
    bool inconclusive = false;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            table[i][j] = searcher.search(i, j);
            inconclusive = inconclusive || table[i][j].status == IsoStatus::Inconclusive;
        }
    }
    out.candidates = searcher.candidates;
    // perfect matching by augmenting paths
    std::vector<int> match_of_target(k, -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
        for (std::size_t j = 0; j < k; ++j) {
            if (table[i][j].status != IsoStatus::Found || seen[j]) {
                continue;
            }
            seen[j] = true;
            if (match_of_target[j] < 0 || augment(static_cast<std::size_t>(match_of_target[j]), seen)) {
                match_of_target[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<bool> seen(k, false);
        if (!augment(i, seen)) {
            out.status = inconclusive ? IsoStatus::Inconclusive : IsoStatus::ProvenNone;
            out.detail = "no isomorphism for component " + std::to_string(i);
            if (searcher.exhausted) {
                out.detail += " (candidate cap reached)";
            }
            return out;
        }
    }
    out.map.parts.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        auto i = static_cast<std::size_t>(match_of_target[j]);
        out.map.parts[i] = ComponentMap(static_cast<int>(j), table[i][j].phi);
    }
    if (!is_isomorphism(out.map, m, n)) {
        fail(ErrorKind::InconsistentInput, "isomorphism search produced a non-isomorphism");
    }
    out.status = IsoStatus::Found;
    return out;
}

} // namespace mvtop
