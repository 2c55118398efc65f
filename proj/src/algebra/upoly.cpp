#include "mvtop/algebra/upoly.hpp"

#include "mvtop/error.hpp"

#include <sstream>

namespace mvtop {

namespace {
const Rat kZero = 0;
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rat& constant) {
    if (constant != 0) {
        coeffs_.push_back(constant);
    }
}

UniPoly::UniPoly(long constant) : UniPoly(Rat(constant)) {}

UniPoly UniPoly::x() { return monomial(1, 1); }

UniPoly UniPoly::monomial(const Rat& c, int degree) {
    std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rat& root) { return UniPoly(std::vector<Rat>{-root, Rat(1)}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& UniPoly::lc() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Rat UniPoly::eval(const Rat& at) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v[i - 1] = coeffs_[i] * static_cast<long>(i);
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) {
        return {};
    }
    Rat inv = 1 / lc();
    return inv * *this;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + UniPoly(*it);
    }
    return acc;
}

UniPoly UniPoly::pow(int exponent) const {
    UniPoly result(1);
    UniPoly base = *this;
    while (exponent > 0) {
        if ((exponent & 1) != 0) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

UniPoly UniPoly::reversed(int deg) const {
    std::vector<Rat> v(static_cast<std::size_t>(deg) + 1, Rat(0));
    for (int i = 0; i <= degree(); ++i) {
        v[static_cast<std::size_t>(deg - i)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return UniPoly(std::move(v));
}

std::vector<Int> UniPoly::integer_coeffs() const {
    Int den = 1;
    for (const auto& c : coeffs_) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    Int g = 0;
    for (const auto& c : coeffs_) {
        Int v = c.get_num() * (den / c.get_den());
        out.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 0) {
        if (!out.empty() && out.back() < 0) {
            g = -g;
        }
        for (auto& v : out) {
            v /= g;
        }
    }
    return out;
}

UniPoly UniPoly::primitive() const { return from_integers(integer_coeffs()); }

int UniPoly::multiplicity_of(const UniPoly& irreducible) const {
    if (is_zero()) {
        fail(ErrorKind::ZeroPolynomial, "multiplicity in the zero polynomial");
    }
    int k = 0;
    UniPoly cur = *this;
    while (true) {
        auto [q, r] = divmod(cur, irreducible);
        if (!r.is_zero()) {
            return k;
        }
        cur = std::move(q);
        ++k;
    }
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        Rat mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        v[i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        v[i] += b.coeffs_[i];
    }
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a) {
    std::vector<Rat> v = a.coeffs_;
    for (auto& c : v) {
        c = -c;
    }
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rat& c, const UniPoly& a) {
    std::vector<Rat> v = a.coeffs_;
    for (auto& x : v) {
        x *= c;
    }
    return UniPoly(std::move(v));
}

std::strong_ordering operator<=>(const UniPoly& a, const UniPoly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    for (int i = a.degree(); i >= 0; --i) {
        int s = cmp(a.coeffs_[static_cast<std::size_t>(i)], b.coeffs_[static_cast<std::size_t>(i)]);
        if (s != 0) {
            return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) {
        fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return {UniPoly(), a};
    }
    std::vector<Rat> rem = a.coeffs();
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rat(0));
    Rat inv = 1 / b.lc();
    const auto& bc = b.coeffs();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        Rat q = rem[static_cast<std::size_t>(i + b.degree())] * inv;
        quo[static_cast<std::size_t>(i)] = q;
        if (q == 0) {
            continue;
        }
        for (std::size_t j = 0; j < bc.size(); ++j) {
            rem[static_cast<std::size_t>(i) + j] -= q * bc[j];
        }
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = r.is_zero() ? UniPoly() : r.primitive();
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0(1), s1;
    UniPoly t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        return {UniPoly(), UniPoly(), UniPoly()};
    }
    Rat inv = 1 / r0.lc();
    return {inv * r0, inv * s0, inv * t0};
}

UniPoly from_integers(const std::vector<Int>& coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        v.emplace_back(c);
    }
    return UniPoly(std::move(v));
}

} // namespace mvtop
