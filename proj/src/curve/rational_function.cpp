#include "mvtop/curve/rational_function.hpp"

#include "mvtop/algebra/factor.hpp"
#include "mvtop/algebra/factor_bi.hpp"
#include "mvtop/algebra/poly.hpp"
#include "mvtop/error.hpp"

namespace mvtop {

RationalFunction::RationalFunction(UniPoly num, UniPoly den) {
    if (den.is_zero()) {
        fail(ErrorKind::InvalidArgument, "rational function with zero denominator");
    }
    UniPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num / g;
        den = den / g;
    }
    Rat lc = den.lc();
    num_ = Rat(1 / lc) * num;
    den_ = den.monic();
}

RationalFunction RationalFunction::mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if (a * d - b * c == 0) {
        fail(ErrorKind::InvalidArgument, "degenerate Mobius transformation");
    }
    return {UniPoly(std::vector<Rat>{b, a}), UniPoly(std::vector<Rat>{d, c})};
}

bool RationalFunction::is_identity() const { return num_ == UniPoly::x() && den_ == UniPoly(1); }

std::optional<Rat> RationalFunction::eval(const std::optional<Rat>& at) const {
    if (!at) {
        if (num_.degree() > den_.degree()) {
            return std::nullopt;
        }
        if (num_.degree() < den_.degree()) {
            return Rat(0);
        }
        return num_.lc() / den_.lc();
    }
    Rat d = den_.eval(*at);
    if (d == 0) {
        return std::nullopt;
    }
    return num_.eval(*at) / d;
}

UniPoly RationalFunction::homogenized(const UniPoly& q) const {
    int n = degree();
    int d = q.degree();
    UniPoly out;
    UniPoly np(1);
    std::vector<UniPoly> dp{UniPoly(1)};
    for (int k = 1; k <= d; ++k) {
        dp.push_back(dp.back() * den_);
    }
    (void)n;
    for (int k = 0; k <= d; ++k) {
        if (q.coeff(k) != 0) {
            out += UniPoly(q.coeff(k)) * np * dp[static_cast<std::size_t>(d - k)];
        }
        np *= num_;
    }
    return out;
}

Place RationalFunction::constant_place() const {
    if (!is_constant()) {
        fail(ErrorKind::InvalidArgument, "function " + to_string() + " is not constant");
    }
    return Place::rational(num_.coeff(0));
}

Place RationalFunction::image(const Place& p) const {
    if (is_constant()) {
        return constant_place();
    }
    if (p.is_infinity()) {
        auto v = eval(std::nullopt);
        return v ? Place::rational(*v) : Place::infinity();
    }
    if (p.is_rational()) {
        auto v = eval(p.value());
        return v ? Place::rational(*v) : Place::infinity();
    }
    if ((den_ % p.poly()).is_zero()) {
        return Place::infinity();
    }
    // minimal polynomial of num/den at a root of p: Res_x(p(x), z den(x) - num(x))
    Poly px = Poly::from_uni(p.poly(), VX);
    Poly rel = Poly::var(VZ) * Poly::from_uni(den_, VX) - Poly::from_uni(num_, VX);
    Poly r = rel.degree(VX) > 0 ? resultant(px, rel, VX) : rel;
    auto fs = factor_uni_capped(r.to_uni(VZ), 200);
    if (fs.size() != 1) {
        fail(ErrorKind::InvalidArgument, "image place of " + p.to_string() + " is not irreducible");
    }
    return Place::finite(fs[0].factor);
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
    int n = degree();
    // num(inner) * den_i^n / den(inner) * den_i^n with homogenization degree n
    UniPoly a;
    UniPoly b;
    std::vector<UniPoly> ip{UniPoly(1)};
    std::vector<UniPoly> dp{UniPoly(1)};
    for (int k = 1; k <= n; ++k) {
        ip.push_back(ip.back() * inner.num_);
        dp.push_back(dp.back() * inner.den_);
    }
    for (int k = 0; k <= n; ++k) {
        UniPoly term = ip[static_cast<std::size_t>(k)] * dp[static_cast<std::size_t>(n - k)];
        a += UniPoly(num_.coeff(k)) * term;
        b += UniPoly(den_.coeff(k)) * term;
    }
    return {a, b};
}

RationalFunction RationalFunction::mobius_inverse() const {
    if (!is_mobius()) {
        fail(ErrorKind::InvalidArgument, to_string() + " is not a Mobius transformation");
    }
    Rat a = num_.coeff(1), b = num_.coeff(0), c = den_.coeff(1), d = den_.coeff(0);
    return mobius(d, -b, -c, a);
}

std::vector<std::pair<Place, int>> places_of(const UniPoly& p) {
    std::vector<std::pair<Place, int>> out;
    for (const auto& [f, m] : factor_uni_capped(p, 200)) {
        out.emplace_back(Place::finite(f), m);
    }
    return out;
}

std::vector<std::pair<Place, int>> RationalFunction::preimage(const Place& q) const {
    if (is_constant()) {
        fail(ErrorKind::ConstantMapOverSupport, "preimage under a constant map");
    }
    std::vector<std::pair<Place, int>> out;
    int n = degree();
    if (q.is_infinity()) {
        if (den_.degree() > 0) {
            out = places_of(den_);
        }
        if (n > den_.degree()) {
            out.emplace_back(Place::infinity(), n - den_.degree());
        }
        return out;
    }
    UniPoly h = homogenized(q.poly());
    if (h.degree() > 0) {
        out = places_of(h);
    }
    int at_inf = n * q.degree() - h.degree();
    if (at_inf > 0) {
        out.emplace_back(Place::infinity(), at_inf);
    }
    return out;
}

int RationalFunction::ramification_index(const Place& p) const {
    for (const auto& [pre, e] : preimage(image(p))) {
        if (pre == p) {
            return e;
        }
    }
    fail(ErrorKind::InvalidArgument, "place not found in its own fiber");
}

std::string RationalFunction::to_string() const {
    if (den_ == UniPoly(1)) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction parse_rational_function(const std::string& text) {
    auto [n, d] = parse_fraction(text);
    return {n.to_uni(VX), d.to_uni(VX)};
}

Divisor pullback_divisor(const RationalFunction& f, const Divisor& d) {
    Divisor out;
    if (f.is_constant()) {
        if (d.contains(f.constant_place())) {
            fail(ErrorKind::ConstantMapOverSupport,
                 "constant map " + f.to_string() + " lands in the divisor support");
        }
        return out;
    }
    for (const auto& [q, m] : d.terms()) {
        for (const auto& [p, e] : f.preimage(q)) {
            out.add(p, m * e);
        }
    }
    return out;
}

Divisor ramification_divisor(const RationalFunction& f) {
    if (f.is_constant()) {
        fail(ErrorKind::ConstantComponent, "ramification of a constant map");
    }
    Divisor out;
    UniPoly w = f.num().derivative() * f.den() - f.num() * f.den().derivative();
    if (w.degree() > 0) {
        for (const auto& [p, m] : places_of(w)) {
            out.add(p, m);
        }
    }
    int e_inf;
    int dn = f.num().degree();
    int dd = f.den().degree();
    if (dn > dd) {
        e_inf = dn - dd;
    } else if (dn < dd) {
        e_inf = dd - dn;
    } else {
        Rat c = f.num().lc() / f.den().lc();
        e_inf = dd - (f.num() - UniPoly(c) * f.den()).degree();
    }
    if (e_inf > 1) {
        out.add(Place::infinity(), e_inf - 1);
    }
    return out;
}

} // namespace mvtop
