#include "mvtop/algebra/factor.hpp"

#include "modp.hpp"
#include "mvtop/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mvtop {

namespace {

constexpr modp::u64 kPrimes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069,
                                 10079, 10091, 10093, 10099, 10103, 10111, 10133};
constexpr int kPrimeTrials = 5;

std::vector<Int> to_ints(const UniPoly& p) { return p.integer_coeffs(); }

Int coeff_norm_bound(const std::vector<Int>& f) {
    Int sumsq = 0;
    for (const auto& c : f) {
        sumsq += c * c;
    }
    Int root = sqrt(sumsq) + 1;
    Int lc = abs(f.back());
    Int bound = lc * root;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.size() - 1);
    return bound;
}

Int symmetric(const Int& c, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) {
        r -= m;
    }
    return r;
}

// f primitive, squarefree, deg >= 2.
std::vector<UniPoly> zassenhaus(const std::vector<Int>& f) {
    std::mt19937_64 rng(0x5eed);
    modp::u64 best_p = 0;
    std::vector<modp::Poly> best;
    int trials = 0;
    for (modp::u64 p : kPrimes) {
        if (trials == kPrimeTrials) {
            break;
        }
        Int lc_mod = f.back() % static_cast<unsigned long>(p);
        if (lc_mod == 0) {
            continue;
        }
        modp::Poly fp = modp::reduce(f, p);
        if (modp::gcd(fp, modp::derivative(fp, p), p).size() != 1) {
            continue;
        }
        ++trials;
        auto fs = modp::factor_squarefree(fp, p, rng);
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = std::move(fs);
        }
        if (best.size() == 1) {
            break;
        }
    }
    if (best_p == 0) {
        fail(ErrorKind::InvalidArgument, "no suitable prime for factorization");
    }
    if (best.size() == 1) {
        return {from_integers(f)};
    }
    const modp::u64 p = best_p;
    Int bound = 2 * coeff_norm_bound(f) + 1;
    unsigned k = 1;
    Int m = static_cast<unsigned long>(p);
    while (m <= bound) {
        m *= static_cast<unsigned long>(p);
        ++k;
    }
    std::vector<modp::ZPoly> lifted = modp::hensel_lift(f, best, p, k);

    std::vector<UniPoly> found;
    std::vector<Int> rest = f;
    std::vector<std::size_t> live(lifted.size());
    std::iota(live.begin(), live.end(), 0);
    std::size_t s = 1;
    while (2 * s <= live.size()) {
        bool progressed = false;
        std::vector<std::size_t> pick(s);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            Int lc = rest.back();
            modp::ZPoly prod{lc};
            for (std::size_t idx : pick) {
                prod = modp::zmod(modp::zmul(prod, lifted[live[idx]]), m);
            }
            for (auto& c : prod) {
                c = symmetric(c, m);
            }
            UniPoly cand = from_integers(prod).primitive();
            UniPoly restp = from_integers(rest);
            auto [q, r] = divmod(restp, cand);
            if (r.is_zero()) {
                found.push_back(cand);
                rest = q.integer_coeffs();
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
            // next combination
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
    if (rest.size() > 1) {
        found.push_back(from_integers(rest));
    }
    return found;
}

std::vector<UniPoly> factor_squarefree_int(const UniPoly& g) {
    if (g.degree() <= 1) {
        return {g};
    }
    std::vector<UniPoly> out;
    UniPoly h = g;
    int shift = 0;
    while (h.coeff(0) == 0) {
        h = h / UniPoly::x();
        ++shift;
    }
    if (shift > 0) {
        out.push_back(UniPoly::x());
    }
    if (h.degree() == 1) {
        out.push_back(h);
    } else if (h.degree() > 1) {
        for (auto& f : zassenhaus(to_ints(h))) {
            out.push_back(f);
        }
    }
    return out;
}

} // namespace

std::vector<UniFactor> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) {
        fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
    }
    std::vector<UniFactor> out;
    if (p.degree() == 0) {
        return out;
    }
    UniPoly a = p.monic();
    UniPoly b = a.derivative();
    UniPoly c = gcd(a, b);
    UniPoly w = a / c;
    UniPoly y = b / c;
    UniPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        UniPoly g = gcd(w, z);
        if (g.degree() > 0) {
            out.push_back({g, i});
        }
        w = w / g;
        y = z / g;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

std::vector<UniFactor> factor_uni_capped(const UniPoly& p, int cap) {
    if (p.is_zero()) {
        fail(ErrorKind::ZeroPolynomial, "factorization of zero");
    }
    if (p.degree() > cap) {
        fail(ErrorKind::DegreeCap,
             "degree " + std::to_string(p.degree()) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<UniFactor> out;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (auto& f : factor_squarefree_int(part.primitive())) {
            out.push_back({f.monic(), mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const UniFactor& a, const UniFactor& b) { return a.factor < b.factor; });
    return out;
}

std::vector<UniFactor> factor_uni(const UniPoly& p) { return factor_uni_capped(p, kFactorDegreeCap); }

std::vector<Rat> rational_roots(const UniPoly& p) {
    if (p.is_zero()) {
        fail(ErrorKind::ZeroPolynomial, "roots of zero");
    }
    std::vector<Rat> out;
    for (const auto& [f, m] : factor_uni_capped(p, 200)) {
        if (f.degree() == 1) {
            out.push_back(-f.coeff(0));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mvtop
