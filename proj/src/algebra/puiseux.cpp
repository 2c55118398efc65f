#include "mvtop/algebra/puiseux.hpp"

#include "mvtop/algebra/factor.hpp"
#include "mvtop/algebra/factor_bi.hpp"
#include "mvtop/algebra/newton.hpp"
#include "mvtop/error.hpp"

#include <numeric>

namespace mvtop {

namespace {

struct Level {
    Rat c;
    int e, h, u, v;
};

struct Series {
    long low = 0;
    std::vector<Rat> c;
    long valid = 0; // exponents >= valid are unknown
};

struct Budget {
    int max_depth;
    int terms;
};

struct DepthExceeded {};

// u*e - v*h = 1
void bezout(int e, int h, int& u, int& v) {
    long old_r = e, r = h, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    // old_s*e + old_t*h = old_r = +-1
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    u = static_cast<int>(old_s);
    v = static_cast<int>(-old_t);
}

Poly duval(const Poly& g, const Level& lv) {
    Poly base = Poly(rat_pow(lv.c, lv.u)) + Poly::var(VY);
    std::vector<Poly> pows{Poly(1)};
    Poly out;
    for (const auto& [ex, a] : g.terms()) {
        int j = ex[VX];
        int k = ex[VY];
        while (static_cast<int>(pows.size()) <= k) {
            pows.push_back(pows.back() * base);
        }
        Exponent t{};
        t[VX] = lv.e * j + lv.h * k;
        out += Poly::monomial(a * rat_pow(lv.c, static_cast<long>(lv.v) * j), t) * pows[k];
    }
    Exponent shift{};
    shift[VX] = -out.low_degree(VX);
    return out * Poly::monomial(1, shift);
}

// Series in T with coefficient list truncated at n terms.
std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t n) {
    std::vector<Rat> out(n, Rat(0));
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Rat> to_series(const Poly& p, std::size_t n) {
    std::vector<Rat> out(n, Rat(0));
    for (const auto& [e, c] : p.terms()) {
        if (e[VX] < static_cast<int>(n)) {
            out[static_cast<std::size_t>(e[VX])] = c;
        }
    }
    return out;
}

// Simple root Y(0) = 0 of g(T, Y); returns Y mod T^n.
std::vector<Rat> implicit_root(const Poly& g, std::size_t n) {
    auto cs = g.coeffs_in(VY);
    std::vector<std::vector<Rat>> cser;
    for (const auto& c : cs) {
        cser.push_back(to_series(c, n));
    }
    Rat slope = cser.size() > 1 ? cser[1][0] : Rat(0);
    if (slope == 0) {
        fail(ErrorKind::InvalidArgument, "implicit root is not simple");
    }
    std::vector<Rat> y(n, Rat(0));
    for (std::size_t it = 0; it < n; ++it) {
        std::vector<Rat> acc(n, Rat(0));
        for (std::size_t k = cser.size(); k-- > 0;) {
            acc = series_mul(acc, y, n);
            for (std::size_t i = 0; i < n; ++i) {
                acc[i] += cser[k][i];
            }
        }
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (acc[i] != 0) {
                zero = false;
            }
            y[i] -= acc[i] / slope;
        }
        if (zero) {
            break;
        }
    }
    return y;
}

PuiseuxBranch assemble(const Place& center, const std::vector<Level>& path, Series y,
                       long e_total) {
    // walk levels bottom-up: y_{k-1} = x_k^h (c^u + y_k), x_{k-1} = c^v x_k^e
    Rat kappa = 1;
    long xexp = 1;
    for (std::size_t i = path.size(); i-- > 0;) {
        const Level& lv = path[i];
        Rat cu = rat_pow(lv.c, lv.u);
        // c^u + y
        long shift_low = std::min<long>(y.low, 0);
        std::vector<Rat> c(static_cast<std::size_t>(std::max<long>(y.valid - shift_low, 1)),
                           Rat(0));
        for (std::size_t j = 0; j < y.c.size(); ++j) {
            long ex = y.low + static_cast<long>(j);
            if (ex < y.valid) {
                c[static_cast<std::size_t>(ex - shift_low)] += y.c[j];
            }
        }
        if (0 < y.valid) {
            c[static_cast<std::size_t>(-shift_low)] += cu;
        }
        Rat scale = rat_pow(kappa, lv.h);
        for (auto& x : c) {
            x *= scale;
        }
        long mono = xexp * lv.h;
        y = Series{shift_low + mono, std::move(c), y.valid + mono};
        kappa = rat_pow(lv.c, lv.v) * rat_pow(kappa, lv.e);
        xexp *= lv.e;
    }
    PuiseuxBranch b;
    b.center = center;
    b.ramification = static_cast<int>(e_total);
    b.x_scale = kappa;
    // strip leading zeros
    std::size_t first = 0;
    while (first < y.c.size() && y.c[first] == 0) {
        ++first;
    }
    b.y_valid = y.valid;
    if (first == y.c.size()) {
        b.y_low = y.valid;
        b.y_valuation = std::nullopt;
    } else {
        b.y_low = y.low + static_cast<long>(first);
        b.y_terms.assign(y.c.begin() + static_cast<long>(first), y.c.end());
        b.y_valuation = b.y_low;
    }
    return b;
}

class Expander {
public:
    Expander(Place center, Budget budget) : center_(std::move(center)), budget_(budget) {}

    std::vector<PuiseuxBranch> branches;

    void descend(Poly g, std::vector<Level>& path, long e_acc, const std::optional<Rat>& gamma_top,
                 int depth) {
        if (depth > budget_.max_depth) {
            throw DepthExceeded{};
        }
        bool top = path.empty();
        if (g.coeff(VY, 0).is_zero()) {
            // Y = 0 is an exact root
            Series zero{0, {}, top ? 0 : budget_.terms};
            auto b = assemble(center_, path, zero, e_acc);
            if (top) {
                b.y_valuation = std::nullopt;
            }
            branches.push_back(std::move(b));
            g = *exact_div(g, Poly::var(VY));
        }
        auto cs = g.coeffs_in(VY);
        std::vector<std::optional<Rat>> vals(cs.size());
        int mu = -1;
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (!cs[k].is_zero()) {
                int lv = cs[k].low_degree(VX);
                vals[k] = Rat(lv);
                if (lv == 0 && mu < 0) {
                    mu = static_cast<int>(k);
                }
            }
        }
        if (!top) {
            vals.resize(static_cast<std::size_t>(mu) + 1);
        }
        for (const auto& seg : lower_hull(vals)) {
            Rat gamma = seg.root_valuation();
            if (!top && gamma <= 0) {
                continue;
            }
            int h = static_cast<int>(gamma.get_num().get_si());
            int e = static_cast<int>(gamma.get_den().get_si());
            std::vector<Rat> rc(static_cast<std::size_t>(seg.length() / e) + 1, Rat(0));
            for (int i = 0; i * e <= seg.length(); ++i) {
                int k = seg.k0 + i * e;
                Rat val = seg.v0 - gamma * Rat(k - seg.k0);
                if (val.get_den() != 1) {
                    continue;
                }
                Exponent ex{};
                ex[VX] = static_cast<int>(val.get_num().get_si());
                auto it = cs[static_cast<std::size_t>(k)].terms().find(ex);
                if (it != cs[static_cast<std::size_t>(k)].terms().end()) {
                    rc[static_cast<std::size_t>(i)] = it->second;
                }
            }
            UniPoly residual(rc);
            std::optional<Rat> gtop = top ? std::optional<Rat>(gamma) : gamma_top;
            long e_new = e_acc * e;
            for (const auto& [phi, mult] : factor_uni_capped(residual, 200)) {
                if (phi.degree() > 1) {
                    if (mult > 1) {
                        fail(ErrorKind::UnsupportedBoundary,
                             "repeated non-rational residual factor " + phi.to_string());
                    }
                    PuiseuxBranch b;
                    b.center = center_;
                    b.ramification = static_cast<int>(e_new);
                    b.residue_degree = phi.degree();
                    b.rational = false;
                    Rat vy = *gtop * Rat(e_new);
                    b.y_valuation = vy.get_num().get_si();
                    b.y_low = *b.y_valuation;
                    b.y_valid = b.y_low;
                    branches.push_back(std::move(b));
                    continue;
                }
                Level lv{-phi.coeff(0), e, h, 0, 0};
                bezout(e, h, lv.u, lv.v);
                Poly g1 = duval(g, lv);
                path.push_back(lv);
                if (mult == 1) {
                    auto n = static_cast<std::size_t>(budget_.terms);
                    std::vector<Rat> ys = implicit_root(g1, n);
                    Series s{0, std::move(ys), budget_.terms};
                    branches.push_back(assemble(center_, path, s, e_new));
                } else {
                    descend(g1, path, e_new, gtop, depth + 1);
                }
                path.pop_back();
            }
        }
    }

private:
    Place center_;
    Budget budget_;
};

} // namespace

Rat PuiseuxBranch::y_slope() const {
    if (!y_valuation) {
        fail(ErrorKind::InvalidArgument, "y vanishes on this branch");
    }
    return Rat(*y_valuation) / Rat(ramification);
}

int initial_puiseux_order(const Poly& f) { return 2 * (f.degree(VX) + f.degree(VY)); }

Poly recenter(const Poly& f, const Place& center) {
    if (center.is_infinity()) {
        return f.reverse(VX, f.degree(VX));
    }
    if (!center.is_rational()) {
        fail(ErrorKind::InvalidArgument, "expansion center " + center.to_string() + " is not rational");
    }
    return f.substitute(VX, Poly::var(VX) + Poly(center.value()));
}

std::vector<PuiseuxBranch> puiseux_branches(const Poly& f, const Place& center, int order) {
    if (f.degree(VY) < 1) {
        fail(ErrorKind::InvalidArgument, "expansion needs positive degree in y");
    }
    for (int v : variables_of(f)) {
        if (v != VX && v != VY) {
            fail(ErrorKind::InvalidArgument, "expansion expects a polynomial in x, y");
        }
    }
    Poly g = recenter(f, center);
    int depth_budget = std::max(order, 1);
    for (int attempt = 0; attempt <= 3; ++attempt) {
        Expander ex(center, Budget{depth_budget, std::max(order, 4)});
        std::vector<Level> path;
        try {
            ex.descend(g, path, 1, std::nullopt, 0);
            return std::move(ex.branches);
        } catch (const DepthExceeded&) {
            depth_budget *= 2;
        }
    }
    fail(ErrorKind::PrecisionExhausted,
         "branches at " + center.to_string() + " not separated within 8x the initial order");
}

std::vector<PuiseuxBranch> puiseux_branches(const Poly& f, const Place& center) {
    return puiseux_branches(f, center, initial_puiseux_order(f));
}

} // namespace mvtop
