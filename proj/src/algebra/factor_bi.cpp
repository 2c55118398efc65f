#include "mvtop/algebra/factor_bi.hpp"

#include "mvtop/algebra/factor.hpp"
#include "mvtop/error.hpp"

#include <algorithm>
#include <numeric>

namespace mvtop {

namespace {

constexpr int kKroneckerDegreeCap = 120;
constexpr std::size_t kRecombinationCap = 20;

// s^(i + stride*j) for the term a^i b^j.
UniPoly kronecker(const Poly& f, int a, int b, int stride) {
    std::vector<Rat> cs;
    for (const auto& [e, c] : f.terms()) {
        std::size_t k = static_cast<std::size_t>(e[a] + stride * e[b]);
        if (cs.size() <= k) {
            cs.resize(k + 1, Rat(0));
        }
        cs[k] = c;
    }
    return UniPoly(std::move(cs));
}

Poly unkronecker(const UniPoly& u, int a, int b, int stride) {
    Poly out;
    for (int k = 0; k <= u.degree(); ++k) {
        Exponent e{};
        e[a] = k % stride;
        e[b] = k / stride;
        out += Poly::monomial(u.coeff(k), e);
    }
    return out;
}

void add_factor(std::vector<PolyFactor>& out, const Poly& f, int mult) {
    Poly g = f.primitive();
    for (auto& pf : out) {
        if (pf.factor == g) {
            pf.multiplicity += mult;
            return;
        }
    }
    out.push_back({g, mult});
}

// f in variables a, b only, not divisible by a or b.
void factor_two(const Poly& f, int a, int b, std::vector<PolyFactor>& out) {
    int stride = f.degree(a) + 1;
    UniPoly image = kronecker(f, a, b, stride);
    std::vector<UniPoly> pieces;
    for (const auto& [g, m] : factor_uni_capped(image, kKroneckerDegreeCap)) {
        for (int i = 0; i < m; ++i) {
            pieces.push_back(g);
        }
    }
    if (pieces.size() > kRecombinationCap) {
        fail(ErrorKind::DegreeCap, "too many modular pieces in bivariate factorization");
    }
    Poly rest = f;
    std::vector<std::size_t> live(pieces.size());
    std::iota(live.begin(), live.end(), 0);
    std::size_t s = 1;
    while (2 * s <= live.size()) {
        bool progressed = false;
        std::vector<std::size_t> pick(s);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            UniPoly prod(1);
            for (std::size_t idx : pick) {
                prod *= pieces[live[idx]];
            }
            Poly cand = unkronecker(prod.primitive(), a, b, stride);
            if (cand.degree(a) <= rest.degree(a) && cand.degree(b) <= rest.degree(b)) {
                if (auto q = exact_div(rest, cand)) {
                    add_factor(out, cand, 1);
                    rest = *q;
                    std::vector<std::size_t> next;
                    for (std::size_t i = 0; i < live.size(); ++i) {
                        if (std::find(pick.begin(), pick.end(), i) == pick.end()) {
                            next.push_back(live[i]);
                        }
                    }
                    live = std::move(next);
                    progressed = true;
                    break;
                }
            }
            std::size_t i = s;
            while (i > 0 && pick[i - 1] == live.size() - s + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++pick[i - 1];
            for (std::size_t j = i; j < s; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
        }
        if (!progressed) {
            ++s;
        }
    }
    if (!rest.is_constant()) {
        add_factor(out, rest, 1);
    }
}

} // namespace

std::vector<int> variables_of(const Poly& f) {
    std::vector<int> vs;
    for (int v = 0; v < kMaxVars; ++v) {
        if (f.involves(v)) {
            vs.push_back(v);
        }
    }
    return vs;
}

std::vector<PolyFactor> factor_bi(const Poly& f) {
    if (f.is_zero()) {
        fail(ErrorKind::ZeroPolynomial, "factorization of zero");
    }
    std::vector<int> vs = variables_of(f);
    std::vector<PolyFactor> out;
    if (vs.empty()) {
        return out;
    }
    if (vs.size() == 1) {
        for (const auto& [g, m] : factor_uni_capped(f.to_uni(vs[0]), kKroneckerDegreeCap)) {
            add_factor(out, Poly::from_uni(g, vs[0]), m);
        }
    } else if (vs.size() == 2) {
        int a = vs[0];
        int b = vs[1];
        Poly rest = f;
        for (int v : {a, b}) {
            int low = rest.low_degree(v);
            if (low > 0) {
                add_factor(out, Poly::var(v), low);
                Exponent e{};
                e[v] = low;
                rest = *exact_div(rest, Poly::monomial(1, e));
            }
        }
        std::vector<int> rest_vars = variables_of(rest);
        if (rest_vars.size() == 2) {
            std::vector<PolyFactor> parts;
            factor_two(rest, a, b, parts);
            for (const auto& pf : parts) {
                add_factor(out, pf.factor, pf.multiplicity);
            }
        } else if (rest_vars.size() == 1) {
            for (const auto& pf : factor_bi(rest)) {
                add_factor(out, pf.factor, pf.multiplicity);
            }
        }
    } else {
        fail(ErrorKind::DegreeCap, "factorization supports at most two variables");
    }
    std::sort(out.begin(), out.end(),
              [](const PolyFactor& x, const PolyFactor& y) { return x.factor < y.factor; });
    return out;
}

namespace {

// Content of f as a polynomial in v: gcd of its coefficients (univariate in
// the other variable u).
UniPoly content_in(const Poly& f, int v, int u) {
    UniPoly g;
    for (const auto& c : f.coeffs_in(v)) {
        if (!c.is_zero()) {
            g = gcd(g, c.to_uni(u));
            if (g.degree() == 0) {
                break;
            }
        }
    }
    return g;
}

bool certified_by_specialization(const Poly& f, int v, int u) {
    if (content_in(f, v, u).degree() > 0) {
        return false;
    }
    Poly lc = f.coeff(v, f.degree(v));
    for (long k = 0; k < 6; ++k) {
        Rat at = (k % 2 == 0) ? Rat(k / 2 + 2) : Rat(-(k / 2) - 2);
        if (lc.eval(u, at).is_zero()) {
            continue;
        }
        UniPoly s = f.eval(u, at).to_uni(v);
        if (s.degree() != f.degree(v)) {
            continue;
        }
        auto fs = factor_uni_capped(s, kKroneckerDegreeCap);
        if (fs.size() == 1 && fs[0].multiplicity == 1) {
            return true;
        }
    }
    return false;
}

} // namespace

bool is_irreducible(const Poly& f) {
    std::vector<int> vs = variables_of(f);
    if (vs.empty()) {
        return false;
    }
    if (vs.size() == 2) {
        if (certified_by_specialization(f, vs[1], vs[0]) ||
            certified_by_specialization(f, vs[0], vs[1])) {
            return true;
        }
    }
    auto fs = factor_bi(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

bool is_squarefree_in(const Poly& f, int v) {
    if (f.degree(v) <= 1) {
        return true;
    }
    return !resultant(f, f.derivative(v), v).is_zero();
}

} // namespace mvtop
