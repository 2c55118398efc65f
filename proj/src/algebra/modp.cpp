#include "modp.hpp"

#include "mvtop/error.hpp"

#include <algorithm>

namespace mvtop::modp {

u64 inv(u64 a, u64 p) {
    // p is prime: a^(p-2).
    u64 result = 1;
    u64 base = a % p;
    u64 e = p - 2;
    while (e > 0) {
        if ((e & 1U) != 0) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1U;
    }
    return result;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

Poly reduce(const std::vector<Int>& f, u64 p) {
    Poly out(f.size());
    Int pm = static_cast<unsigned long>(p);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int r = f[i] % pm;
        if (r < 0) {
            r += pm;
        }
        out[i] = r.get_ui();
    }
    trim(out);
    return out;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = (out[i] + b[i]) % p;
    }
    trim(out);
    return out;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = (out[i] + p - b[i]) % p;
    }
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    trim(out);
    return out;
}

Poly scale(const Poly& a, u64 c, u64 p) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] * c % p;
    }
    trim(out);
    return out;
}

void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
    if (b.empty()) {
        fail(ErrorKind::ZeroPolynomial, "modular division by zero");
    }
    r = a;
    if (a.size() < b.size()) {
        q.clear();
        return;
    }
    q.assign(a.size() - b.size() + 1, 0);
    u64 li = inv(b.back(), p);
    for (std::size_t i = q.size(); i-- > 0;) {
        u64 c = r[i + b.size() - 1] * li % p;
        q[i] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + p - c * b[j] % p) % p;
        }
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
    Poly q, r;
    divmod(a, b, p, q, r);
    return r;
}

Poly monic(const Poly& a, u64 p) {
    if (a.empty()) {
        return a;
    }
    return scale(a, inv(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly ext_gcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b;
    Poly s0{1}, s1;
    Poly t0, t1{1};
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, p, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 li = r0.empty() ? 1 : inv(r0.back(), p);
    s = scale(s0, li, p);
    t = scale(t0, li, p);
    return scale(r0, li, p);
}

Poly derivative(const Poly& a, u64 p) {
    if (a.size() <= 1) {
        return {};
    }
    Poly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        out[i - 1] = a[i] * (i % p) % p;
    }
    trim(out);
    return out;
}

Poly powmod(const Poly& base, const Int& e, const Poly& m, u64 p) {
    Poly result{1};
    result = rem(result, m, p);
    Poly b = rem(base, m, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i) != 0) {
            result = rem(mul(result, b, p), m, p);
        }
    }
    return result;
}

namespace {

void equal_degree(const Poly& g, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
    int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coeff(0, p - 1);
    while (true) {
        Poly a(static_cast<std::size_t>(n));
        for (auto& c : a) {
            c = coeff(rng);
        }
        trim(a);
        if (a.size() <= 1) {
            continue;
        }
        Poly b = sub(powmod(a, e, g, p), Poly{1}, p);
        Poly c = gcd(b, g, p);
        int dc = static_cast<int>(c.size()) - 1;
        if (dc > 0 && dc < n) {
            Poly q, r;
            divmod(g, c, p, q, r);
            equal_degree(c, d, p, rng, out);
            equal_degree(monic(q, p), d, p, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng) {
    std::vector<Poly> out;
    Poly rest = monic(f, p);
    const Poly x{0, 1};
    Poly h = rem(x, rest, p);
    Int pe = static_cast<unsigned long>(p);
    for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
        h = powmod(h, pe, rest, p);
        Poly g = gcd(sub(h, x, p), rest, p);
        if (g.size() > 1) {
            equal_degree(g, d, p, rng, out);
            Poly q, r;
            divmod(rest, g, p, q, r);
            rest = q;
            h = rem(h, rest, p);
        }
    }
    if (rest.size() > 1) {
        out.push_back(monic(rest, p));
    }
    return out;
}

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

ZPoly zmod(const ZPoly& a, const Int& m) {
    ZPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_fdiv_r(out[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    }
    ztrim(out);
    return out;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    ZPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    ztrim(out);
    return out;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] -= b[i];
    }
    ztrim(out);
    return out;
}

ZPoly from_small(const Poly& a) {
    ZPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = static_cast<unsigned long>(a[i]);
    }
    return out;
}

namespace {

Poly product(const std::vector<Poly>& fs, std::size_t lo, std::size_t hi, u64 p) {
    Poly out{1};
    for (std::size_t i = lo; i < hi; ++i) {
        out = mul(out, fs[i], p);
    }
    return out;
}

Poly small_mod(const ZPoly& a, u64 p) { return reduce(a, p); }

// f monic mod m = p^k, f = g0*h0 mod p.
void lift_pair(const ZPoly& f, const Poly& g0, const Poly& h0, u64 p, unsigned k, const Int& m,
               ZPoly& g, ZPoly& h) {
    Poly s, t;
    ext_gcd(g0, h0, p, s, t);
    g = from_small(g0);
    h = from_small(h0);
    Int pj = static_cast<unsigned long>(p);
    for (unsigned j = 1; j < k; ++j) {
        ZPoly e = zmod(zsub(f, zmul(g, h)), m);
        for (auto& c : e) {
            c /= pj;
        }
        Poly es = small_mod(e, p);
        Poly dg = rem(mul(t, es, p), g0, p);
        Poly q, r;
        divmod(sub(es, mul(h0, dg, p), p), g0, p, q, r);
        if (!r.empty()) {
            fail(ErrorKind::InvalidArgument, "Hensel step failed");
        }
        ZPoly dgz = from_small(dg);
        ZPoly dhz = from_small(q);
        g.resize(std::max(g.size(), dgz.size()), Int(0));
        for (std::size_t i = 0; i < dgz.size(); ++i) {
            g[i] += pj * dgz[i];
        }
        h.resize(std::max(h.size(), dhz.size()), Int(0));
        for (std::size_t i = 0; i < dhz.size(); ++i) {
            h[i] += pj * dhz[i];
        }
        pj *= static_cast<unsigned long>(p);
    }
    g = zmod(g, m);
    h = zmod(h, m);
}

void lift_tree(const ZPoly& f, const std::vector<Poly>& fs, std::size_t lo, std::size_t hi, u64 p,
               unsigned k, const Int& m, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(f);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    ZPoly g, h;
    lift_pair(f, product(fs, lo, mid, p), product(fs, mid, hi, p), p, k, m, g, h);
    lift_tree(g, fs, lo, mid, p, k, m, out);
    lift_tree(h, fs, mid, hi, p, k, m, out);
}

} // namespace

std::vector<ZPoly> hensel_lift(const std::vector<Int>& f, const std::vector<Poly>& factors, u64 p,
                               unsigned k) {
    Int m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, k);
    Int lc_inv;
    if (mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t()) == 0) {
        fail(ErrorKind::InvalidArgument, "leading coefficient not invertible");
    }
    ZPoly fm(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        fm[i] = f[i] * lc_inv;
    }
    fm = zmod(fm, m);
    std::vector<ZPoly> out;
    lift_tree(fm, factors, 0, factors.size(), p, k, m, out);
    return out;
}

} // namespace mvtop::modp
