#include "mvtop/curve/parametrize.hpp"

#include "mvtop/error.hpp"

#include <numeric>
#include <tuple>

namespace mvtop {

namespace {

Rat coeff_xy(const Poly& f, int i, int j) {
    Exponent e{i, j, 0, 0};
    auto it = f.terms().find(e);
    return it == f.terms().end() ? Rat(0) : it->second;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) {
        return std::nullopt;
    }
    const Int& n = r.get_num();
    const Int& d = r.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    Int sn;
    Int sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return make_rat(sn, sd);
}

// a s + b t = g with g > 0
std::tuple<long, long, long> ext_gcd(long a, long b) {
    long r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    if (r0 < 0) {
        return {-r0, -s0, -t0};
    }
    return {r0, s0, t0};
}

// c t^k for any integer k
RationalFunction monomial_fn(const Rat& c, long k) {
    if (k >= 0) {
        return {UniPoly::monomial(c, static_cast<int>(k)), UniPoly(1)};
    }
    return {UniPoly(c), UniPoly::monomial(Rat(1), static_cast<int>(-k))};
}

UniPoly lin(const Rat& c0, const Rat& c1) { return UniPoly(std::vector<Rat>{c0, c1}); }

UniPoly quad(const Rat& c0, const Rat& c1, const Rat& c2) {
    return UniPoly(std::vector<Rat>{c0, c1, c2});
}

Poly fn_in_t(const UniPoly& p) { return Poly::from_uni(p, VT); }

void verify(const Poly& f, const Parametrization& p) {
    int dx = f.degree(VX);
    Poly g = f.substitute_fraction(VX, fn_in_t(p.x.num()), fn_in_t(p.x.den()), dx);
    g = g.substitute_fraction(VY, fn_in_t(p.y.num()), fn_in_t(p.y.den()), f.degree(VY));
    if (!g.is_zero()) {
        fail(ErrorKind::UnsupportedCurve, "parametrization check failed for " + f.to_string());
    }
    if (p.x.degree() != f.degree(VY) || p.y.degree() != f.degree(VX)) {
        fail(ErrorKind::UnsupportedCurve, "parametrization of " + f.to_string() + " is not birational");
    }
    int checked = 0;
    for (long k = 1; k <= 40 && checked < 3; ++k) {
        Rat t0 = make_rat(k % 2 ? k : -k, 3);
        auto x0 = p.x.eval(t0);
        auto y0 = p.y.eval(t0);
        if (!x0 || !y0) {
            continue;
        }
        auto back = p.inverse_at(*x0, *y0);
        if (!back) {
            continue;
        }
        if (*back != t0) {
            fail(ErrorKind::UnsupportedCurve, "inverse parametrization check failed for " + f.to_string());
        }
        ++checked;
    }
}

Parametrization conic_through(const Poly& f, const Rat& x0, const Rat& y0) {
    Rat a = coeff_xy(f, 2, 0), b = coeff_xy(f, 1, 1), c = coeff_xy(f, 0, 2);
    Rat fx = f.derivative(VX).eval(VX, x0).eval(VY, y0).constant_term();
    Rat fy = f.derivative(VY).eval(VX, x0).eval(VY, y0).constant_term();
    UniPoly l = lin(fx, fy);
    UniPoly q = quad(a, b, c);
    Parametrization p;
    p.x = RationalFunction(UniPoly(x0) * q - l, q);
    p.y = RationalFunction(UniPoly(y0) * q - UniPoly::x() * l, q);
    p.inverse_num = Poly::var(VY) - Poly(y0);
    p.inverse_den = Poly::var(VX) - Poly(x0);
    p.kind = "conic";
    return p;
}

Parametrization conic(const Poly& f) {
    Rat a = coeff_xy(f, 2, 0), b = coeff_xy(f, 1, 1), c = coeff_xy(f, 0, 2);
    Rat d = coeff_xy(f, 1, 0), e = coeff_xy(f, 0, 1), g = coeff_xy(f, 0, 0);
    // 2 * symmetric matrix
    Rat det = 2 * a * (2 * c * 2 * g - e * e) - b * (b * 2 * g - e * d) + d * (b * e - 2 * c * d);
    if (det == 0) {
        fail(ErrorKind::UnsupportedCurve, "degenerate conic " + f.to_string());
    }
    if (auto s = rat_sqrt(b * b - 4 * a * c)) {
        // rational point at infinity in direction (1, m): lines y = m x + t
        Rat m = (-b + *s) / (2 * c);
        UniPoly num = quad(-g, -e, -c);
        UniPoly den = lin(d + e * m, b + 2 * c * m);
        Parametrization p;
        p.x = RationalFunction(num, den);
        p.y = RationalFunction(UniPoly(m) * num + UniPoly::x() * den, den);
        p.inverse_num = Poly::var(VY) - Poly(m) * Poly::var(VX);
        p.inverse_den = Poly(1);
        p.kind = "conic";
        return p;
    }
    auto pt = find_conic_point(f);
    if (!pt) {
        fail(ErrorKind::UnsupportedCurve, "no rational point found on conic " + f.to_string());
    }
    return conic_through(f, pt->first, pt->second);
}

Parametrization binomial(const Poly& f) {
    auto it = f.terms().begin();
    auto [e1, c1] = *it;
    ++it;
    auto [e2, c2] = *it;
    long alpha = e1[VX] - e2[VX];
    long beta = e1[VY] - e2[VY];
    Rat c = -c2 / c1;
    if (alpha < 0) {
        alpha = -alpha;
        beta = -beta;
        c = 1 / c;
    }
    auto [gg, g1, g2] = ext_gcd(beta, alpha);
    if (gg != 1) {
        fail(ErrorKind::UnsupportedCurve, "binomial curve " + f.to_string() + " is not geometrically irreducible");
    }
    long a = g2, b = g1, gamma = g1, delta = -g2;
    Parametrization p;
    p.x = monomial_fn(rat_pow(c, a), beta);
    p.y = monomial_fn(rat_pow(c, b), -alpha);
    Rat k = rat_pow(c, -(a * gamma + b * delta));
    Exponent num{0, 0, 0, 0};
    Exponent den{0, 0, 0, 0};
    (gamma >= 0 ? num : den)[VX] = static_cast<int>(std::labs(gamma));
    (delta >= 0 ? num : den)[VY] = static_cast<int>(std::labs(delta));
    p.inverse_num = Poly::monomial(k, num);
    p.inverse_den = Poly::monomial(Rat(1), den);
    p.kind = "binomial";
    return p;
}

} // namespace

std::optional<Rat> Parametrization::inverse_at(const Rat& px, const Rat& py) const {
    Rat d = inverse_den.eval(VX, px).eval(VY, py).constant_term();
    if (d == 0) {
        return std::nullopt;
    }
    return inverse_num.eval(VX, px).eval(VY, py).constant_term() / d;
}

std::optional<std::pair<Rat, Rat>> find_conic_point(const Poly& f, int bound) {
    Rat a = coeff_xy(f, 2, 0), b = coeff_xy(f, 1, 1), c = coeff_xy(f, 0, 2);
    Rat d = coeff_xy(f, 1, 0), e = coeff_xy(f, 0, 1), g = coeff_xy(f, 0, 0);
    if (c == 0) {
        return std::nullopt;
    }
    for (long n = 0; n <= bound; ++n) {
        for (long q = 1; q <= bound; ++q) {
            if (std::gcd(n, q) != 1) {
                continue;
            }
            for (long sign : {1L, -1L}) {
                if (n == 0 && sign < 0) {
                    continue;
                }
                Rat x0 = make_rat(sign * n, q);
                // c y^2 + (b x0 + e) y + (a x0^2 + d x0 + g)
                Rat bb = b * x0 + e;
                Rat cc = a * x0 * x0 + d * x0 + g;
                if (auto s = rat_sqrt(bb * bb - 4 * c * cc)) {
                    return std::make_pair(x0, (-bb + *s) / (2 * c));
                }
            }
        }
    }
    return std::nullopt;
}

Parametrization parametrize_component(const Poly& f) {
    if (f.is_zero() || f.is_constant() || f.involves(VZ) || f.involves(VT)) {
        fail(ErrorKind::UnsupportedCurve, "not a plane curve: " + f.to_string());
    }
    int dx = f.degree(VX);
    int dy = f.degree(VY);
    Parametrization p;
    if (dy == 0 || dx == 0) {
        int v = dy == 0 ? VX : VY;
        UniPoly u = f.to_uni(v);
        if (u.degree() != 1) {
            fail(ErrorKind::UnsupportedCurve, f.to_string() + " is not geometrically irreducible");
        }
        Rat root = -u.coeff(0) / u.coeff(1);
        RationalFunction c = RationalFunction::constant(root);
        p.x = dy == 0 ? c : RationalFunction::identity();
        p.y = dy == 0 ? RationalFunction::identity() : c;
        p.inverse_num = Poly::var(dy == 0 ? VY : VX);
        p.inverse_den = Poly(1);
        p.kind = dy == 0 ? "vertical" : "horizontal";
    } else if (dy == 1 || dx == 1) {
        int v = dy == 1 ? VY : VX;
        int w = dy == 1 ? VX : VY;
        // f = a(w) v + b(w)
        UniPoly a = f.coeff(v, 1).to_uni(w);
        UniPoly b = f.coeff(v, 0).to_uni(w);
        RationalFunction solved(Rat(-1) * b, a);
        p.x = dy == 1 ? RationalFunction::identity() : solved;
        p.y = dy == 1 ? solved : RationalFunction::identity();
        p.inverse_num = Poly::var(w);
        p.inverse_den = Poly(1);
        p.kind = dy == 1 ? "graph" : "cograph";
    } else if (f.terms().size() == 2) {
        p = binomial(f);
    } else if (f.total_degree() == 2) {
        p = conic(f);
    } else {
        fail(ErrorKind::UnsupportedCurve, "curve " + f.to_string() + " is outside the supported classes");
    }
    verify(f, p);
    return p;
}

} // namespace mvtop
