#include "mvtop/algebra/poly.hpp"

#include "mvtop/error.hpp"

#include <algorithm>
#include <sstream>

namespace mvtop {

std::string var_name(int v) {
    static const char* names[kMaxVars] = {"x", "y", "z", "t"};
    return names[v];
}

namespace {
const Rat kZero = 0;

Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent e{};
    for (int i = 0; i < kMaxVars; ++i) {
        e[i] = a[i] + b[i];
    }
    return e;
}
} // namespace

Poly::Poly(const Rat& c) {
    if (c != 0) {
        terms_.emplace(Exponent{}, c);
    }
}

Poly::Poly(long c) : Poly(Rat(c)) {}

Poly Poly::var(int v) {
    Exponent e{};
    e[v] = 1;
    return monomial(1, e);
}

Poly Poly::monomial(const Rat& c, const Exponent& e) {
    Poly p;
    if (c != 0) {
        p.terms_.emplace(e, c);
    }
    return p;
}

Poly Poly::from_uni(const UniPoly& p, int v) {
    Poly out;
    for (int i = 0; i <= p.degree(); ++i) {
        Exponent e{};
        e[v] = i;
        out.add_term(e, p.coeff(i));
    }
    return out;
}

void Poly::add_term(const Exponent& e, const Rat& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

int Poly::degree(int v) const {
    if (terms_.empty()) {
        return -1;
    }
    int d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[v]);
    }
    return d;
}

int Poly::low_degree(int v) const {
    if (terms_.empty()) {
        return -1;
    }
    int d = terms_.begin()->first[v];
    for (const auto& [e, c] : terms_) {
        d = std::min(d, e[v]);
    }
    return d;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) {
            s += x;
        }
        d = std::max(d, s);
    }
    return d;
}

const Rat& Poly::lead_coeff() const { return terms_.empty() ? kZero : terms_.rbegin()->second; }

Rat Poly::constant_term() const {
    auto it = terms_.find(Exponent{});
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::coeff(int v, int k) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        if (e[v] == k) {
            Exponent f = e;
            f[v] = 0;
            out.terms_.emplace(f, c);
        }
    }
    return out;
}

std::vector<Poly> Poly::coeffs_in(int v) const {
    std::vector<Poly> out(static_cast<std::size_t>(std::max(degree(v), -1) + 1));
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[v] = 0;
        out[static_cast<std::size_t>(e[v])].terms_.emplace(f, c);
    }
    return out;
}

Poly Poly::from_coeffs(const std::vector<Poly>& cs, int v) {
    Poly out;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e, c] : cs[k].terms_) {
            Exponent f = e;
            f[v] += static_cast<int>(k);
            out.add_term(f, c);
        }
    }
    return out;
}

Poly Poly::eval(int v, const Rat& at) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[v] = 0;
        out.add_term(f, c * rat_pow(at, e[v]));
    }
    return out;
}

Poly Poly::substitute(int v, const Poly& by) const {
    auto cs = coeffs_in(v);
    Poly out;
    for (std::size_t k = cs.size(); k-- > 0;) {
        out = out * by + cs[k];
    }
    return out;
}

Poly Poly::substitute_fraction(int v, const Poly& num, const Poly& den) const {
    return substitute_fraction(v, num, den, degree(v));
}

Poly Poly::substitute_fraction(int v, const Poly& num, const Poly& den, int deg) const {
    if (terms_.empty()) {
        return {};
    }
    auto cs = coeffs_in(v);
    std::vector<Poly> num_pows{Poly(1)};
    std::vector<Poly> den_pows{Poly(1)};
    for (int k = 1; k <= deg; ++k) {
        num_pows.push_back(num_pows.back() * num);
        den_pows.push_back(den_pows.back() * den);
    }
    Poly out;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero()) {
            continue;
        }
        out += cs[k] * num_pows[k] * den_pows[static_cast<std::size_t>(deg) - k];
    }
    return out;
}

Poly Poly::swap_vars(int a, int b) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        std::swap(f[a], f[b]);
        out.terms_.emplace(f, c);
    }
    return out;
}

Poly Poly::reverse(int v, int deg) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[v] = deg - e[v];
        out.terms_.emplace(f, c);
    }
    return out;
}

Poly Poly::derivative(int v) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) {
            continue;
        }
        Exponent f = e;
        f[v] -= 1;
        out.terms_.emplace(f, c * e[v]);
    }
    return out;
}

Poly Poly::pow(int e) const {
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if ((e & 1) != 0) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

UniPoly Poly::to_uni(int v) const {
    std::vector<Rat> cs(static_cast<std::size_t>(std::max(degree(v), -1) + 1), Rat(0));
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < kMaxVars; ++i) {
            if (i != v && e[i] != 0) {
                fail(ErrorKind::InvalidArgument,
                     "polynomial " + to_string() + " is not univariate in " + var_name(v));
            }
        }
        cs[static_cast<std::size_t>(e[v])] = c;
    }
    return UniPoly(std::move(cs));
}

Poly Poly::primitive() const {
    if (terms_.empty()) {
        return {};
    }
    Int den = 1;
    for (const auto& [e, c] : terms_) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        Int v = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rat scale(den, g);
    scale.canonicalize();
    if (lead_coeff() < 0) {
        scale = -scale;
    }
    Poly out;
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e, c * scale);
    }
    return out;
}

Poly Poly::monic() const {
    if (terms_.empty()) {
        return {};
    }
    Rat inv = 1 / lead_coeff();
    Poly out;
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e, c * inv);
    }
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = e == Exponent{};
        bool wrote = false;
        if (mag != 1 || constant) {
            os << mag.get_str();
            wrote = true;
        }
        for (int v = 0; v < kMaxVars; ++v) {
            if (e[v] == 0) {
                continue;
            }
            if (wrote) {
                os << "*";
            }
            os << var_name(v);
            if (e[v] > 1) {
                os << "^" << e[v];
            }
            wrote = true;
        }
    }
    return os.str();
}

Poly& Poly::operator+=(const Poly& b) {
    for (const auto& [e, c] : b.terms_) {
        add_term(e, c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& b) {
    for (const auto& [e, c] : b.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    out += b;
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    out -= b;
    return out;
}

Poly operator-(const Poly& a) {
    Poly out;
    for (const auto& [e, c] : a.terms_) {
        out.terms_.emplace(e, -c);
    }
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(add_exp(ea, eb), ca * cb);
        }
    }
    return out;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    auto ia = a.terms_.rbegin();
    auto ib = b.terms_.rbegin();
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) {
            return c;
        }
        int s = cmp(ia->second, ib->second);
        if (s != 0) {
            return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    if (ia == a.terms_.rend() && ib == b.terms_.rend()) {
        return std::strong_ordering::equal;
    }
    return ia == a.terms_.rend() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) {
        fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    }
    Poly rem = a;
    Poly quo;
    const auto& [lead_e, lead_c] = *b.terms().rbegin();
    Rat inv = 1 / lead_c;
    while (!rem.is_zero()) {
        const auto& [e, c] = *rem.terms().rbegin();
        Exponent q{};
        for (int i = 0; i < kMaxVars; ++i) {
            q[i] = e[i] - lead_e[i];
            if (q[i] < 0) {
                return std::nullopt;
            }
        }
        Poly t = Poly::monomial(c * inv, q);
        quo += t;
        rem -= t * b;
    }
    return quo;
}

Poly resultant(const Poly& f, const Poly& g, int v) {
    if (f.is_zero() || g.is_zero()) {
        fail(ErrorKind::ZeroPolynomial, "resultant of the zero polynomial");
    }
    int m = f.degree(v);
    int n = g.degree(v);
    if (m <= 0 || n <= 0) {
        fail(ErrorKind::VariableAbsent, "resultant variable " + var_name(v) + " absent");
    }
    auto fc = f.coeffs_in(v);
    auto gc = g.coeffs_in(v);
    int size = m + n;
    std::vector<std::vector<Poly>> a(static_cast<std::size_t>(size),
                                     std::vector<Poly>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k <= m; ++k) {
            a[r][r + k] = fc[static_cast<std::size_t>(m - k)];
        }
    }
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= n; ++k) {
            a[n + r][r + k] = gc[static_cast<std::size_t>(n - k)];
        }
    }
    bool negate = false;
    Poly prev(1);
    for (int k = 0; k + 1 < size; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i) {
                if (!a[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) {
                return {};
            }
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                Poly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = exact_div(num, prev);
                if (!q) {
                    fail(ErrorKind::InvalidArgument, "Bareiss division not exact");
                }
                a[i][j] = std::move(*q);
            }
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }
    Poly det = a[size - 1][size - 1];
    return negate ? -det : det;
}

} // namespace mvtop
