#include "mvtop/transfers/bruteforce.hpp"

#include "mvtop/algebra/factor_bi.hpp"
#include "mvtop/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>

namespace mvtop {

namespace {

std::optional<std::vector<long>> integer_points(const std::set<Place>& places, bool& has_infinity) {
    std::vector<long> out;
    has_infinity = false;
    for (const Place& p : places) {
        if (p.is_infinity()) {
            has_infinity = true;
            continue;
        }
        if (!p.is_rational()) {
            return std::nullopt;
        }
        Rat v = p.value();
        if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
            return std::nullopt;
        }
        out.push_back(v.get_num().get_si());
    }
    return out;
}

// h nonzero with every root among the given integers.
bool roots_within(std::vector<std::int64_t> h, const std::vector<long>& allowed) {
    while (!h.empty() && h.back() == 0) {
        h.pop_back();
    }
    if (h.empty()) {
        return false;
    }
    for (long s : allowed) {
        while (h.size() > 1) {
            // synthetic division by (x - s)
            std::vector<std::int64_t> q(h.size() - 1);
            std::int64_t acc = 0;
            for (std::size_t k = h.size(); k-- > 1;) {
                acc = acc * s + h[k];
                q[k - 1] = acc;
            }
            if (acc * s + h[0] != 0) {
                break;
            }
            h = std::move(q);
        }
    }
    return h.size() == 1;
}

struct Prefilter {
    bool enabled = false;
    std::vector<long> source_points;
    std::vector<long> target_points;
    bool target_infinity = false;
};

} // namespace

std::vector<ElemCorr> enumerate_admissible(const ModulusPair& m, const ModulusPair& n, std::size_t target,
                                           const EnumerationBounds& b) {
    if (m.size() != 1) {
        fail(ErrorKind::InvalidArgument, "enumeration needs a one-component source");
    }
    const int side = b.bidegree + 1;
    const int slots = side * side;
    const long base = 2 * b.height + 1;
    double tuples = 1;
    for (int k = 0; k < slots; ++k) {
        tuples *= static_cast<double>(base);
    }
    if (tuples > static_cast<double>(b.budget)) {
        fail(ErrorKind::BudgetExceeded, "enumeration needs " + std::to_string(static_cast<long long>(tuples)) +
                                            " tuples, budget " + std::to_string(b.budget));
    }

    Prefilter pre;
    bool src_inf = false;
    auto sp = integer_points(m.boundary(0), src_inf);
    auto tp = integer_points(n.boundary(target), pre.target_infinity);
    if (sp && tp) {
        pre.enabled = true;
        pre.source_points = *sp;
        pre.target_points = *tp;
    }

    struct Found {
        int dx;
        int dy;
        long height;
        ElemCorr v;
    };
    std::vector<Found> found;
    std::vector<long> c(static_cast<std::size_t>(slots), -b.height);
    auto at = [&](int i, int j) { return c[static_cast<std::size_t>(i * side + j)]; };
    std::vector<std::int64_t> h(static_cast<std::size_t>(side));
    for (;;) {
        bool keep = true;
        int dx = -1;
        int dy = -1;
        long lead = 0;
        long g = 0;
        long height = 0;
        for (int i = 0; i < side; ++i) {
            for (int j = 0; j < side; ++j) {
                long a = at(i, j);
                if (a == 0) {
                    continue;
                }
                dx = std::max(dx, i);
                dy = std::max(dy, j);
                lead = a; // last nonzero in (i, j) lex order
                g = std::gcd(g, a);
                height = std::max(height, std::abs(a));
            }
        }
        keep = dy >= 1 && lead > 0 && g == 1;
        if (keep && pre.enabled) {
            for (long r : pre.target_points) {
                for (int i = 0; i < side; ++i) {
                    std::int64_t s = 0;
                    std::int64_t rp = 1;
                    for (int j = 0; j < side; ++j) {
                        s += at(i, j) * rp;
                        rp *= r;
                    }
                    h[static_cast<std::size_t>(i)] = s;
                }
                if (!roots_within(h, pre.source_points)) {
                    keep = false;
                    break;
                }
            }
            if (keep && pre.target_infinity) {
                for (int i = 0; i < side; ++i) {
                    h[static_cast<std::size_t>(i)] = at(i, dy);
                }
                keep = roots_within(h, pre.source_points);
            }
        }
        if (keep) {
            Poly f;
            for (int i = 0; i < side; ++i) {
                for (int j = 0; j < side; ++j) {
                    if (at(i, j) != 0) {
                        f += Poly::monomial(at(i, j), Exponent{i, j, 0, 0});
                    }
                }
            }
            if (is_irreducible(f)) {
                ElemCorr v{0, target, f};
                try {
                    if (check_elem_admissible(v, m, n)) {
                        found.push_back({dx, dy, height, v});
                    }
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::InvalidArgument) {
                        throw;
                    }
                }
            }
        }
        int k = 0;
        while (k < slots && c[static_cast<std::size_t>(k)] == b.height) {
            c[static_cast<std::size_t>(k)] = -b.height;
            ++k;
        }
        if (k == slots) {
            break;
        }
        ++c[static_cast<std::size_t>(k)];
    }
    std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
        return std::tie(x.dx, x.dy, x.height, x.v) < std::tie(y.dx, y.dy, y.height, y.v);
    });
    std::vector<ElemCorr> out;
    out.reserve(found.size());
    for (auto& f : found) {
        out.push_back(std::move(f.v));
    }
    return out;
}

BruteForceReport mv_cartesian_bruteforce(const ModulusPair& m, const MSquare& t, const EnumerationBounds& b) {
    auto all = [&](const ModulusPair& n) {
        std::vector<ElemCorr> out;
        for (std::size_t j = 0; j < n.size(); ++j) {
            auto part = enumerate_admissible(m, n, j, b);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    };
    auto e00 = all(t.t00());
    auto e01 = all(t.t01());
    auto e10 = all(t.t10());
    BruteForceReport r;
    r.e00 = e00.size();
    r.e01 = e01.size();
    r.e10 = e10.size();

    std::set<ElemCorr> lifted;
    for (const auto& g : e00) {
        auto pf = push_forward(t.v, g, m);
        if (pf.degree == 1) {
            lifted.insert(pf.image);
        }
    }
    std::map<ElemCorr, ElemCorr> matched;
    for (const auto& beta : e10) {
        auto pf = push_forward(t.u, beta, m);
        if (pf.degree == 1) {
            matched.emplace(pf.image, beta);
        }
    }
    std::map<ElemCorr, std::vector<std::pair<ElemCorr, int>>> groups;
    for (const auto& alpha : e01) {
        auto pf = push_forward(t.p, alpha, m);
        groups[pf.image].emplace_back(alpha, pf.degree);
    }

    for (const auto& [w, sheets] : groups) {
        auto hit = matched.find(w);
        if (hit != matched.end()) {
            for (const auto& [alpha, k] : sheets) {
                r.pairs.push_back({Corr(alpha), Corr(hit->second, k), lifted.contains(alpha), "matched"});
            }
        }
        for (std::size_t i = 0; i + 1 < sheets.size(); ++i) {
            const auto& [a1, k1] = sheets[i];
            const auto& [a2, k2] = sheets[i + 1];
            Corr alpha = Corr(a1, k2) - Corr(a2, k1);
            r.pairs.push_back({alpha, Corr(), lifted.contains(a1) && lifted.contains(a2), "resurgent"});
        }
    }
    for (const auto& p : r.pairs) {
        if (!p.liftable) {
            r.cartesian = false;
            if (r.detail.empty()) {
                r.detail = "no admissible lift of " + p.alpha.to_string() + " / " + p.beta.to_string();
            }
        }
    }
    return r;
}

} // namespace mvtop
