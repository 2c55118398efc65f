#include "mvtop/algebra/poly.hpp"
#include "mvtop/error.hpp"

#include <cctype>

namespace mvtop {

namespace {

struct Frac {
    Poly num;
    Poly den{1};
};

Frac mul(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
Frac add(const Frac& a, const Frac& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Frac neg(const Frac& a) { return {-a.num, a.den}; }

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Frac parse() {
        Frac f = expr();
        skip();
        if (pos_ != s_.size()) {
            error("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return f;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::ParseError,
             "in \"" + s_ + "\" at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) {
            return false;
        }
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) != 0 || std::isalpha(static_cast<unsigned char>(c)) != 0 ||
               c == '(';
    }

    Frac expr() {
        Frac acc;
        bool negate = false;
        if (peek('-')) {
            ++pos_;
            negate = true;
        } else if (peek('+')) {
            ++pos_;
        }
        acc = term();
        if (negate) {
            acc = neg(acc);
        }
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc = add(acc, term());
            } else if (peek('-')) {
                ++pos_;
                acc = add(acc, neg(term()));
            } else {
                return acc;
            }
        }
    }

    Frac term() {
        Frac acc = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = mul(acc, power());
            } else if (peek('/')) {
                ++pos_;
                Frac d = power();
                if (d.num.is_zero()) {
                    error("division by zero");
                }
                acc = mul(acc, Frac{d.den, d.num});
            } else if (starts_factor()) {
                acc = mul(acc, power());
            } else {
                return acc;
            }
        }
    }

    Frac power() {
        Frac base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
                ++pos_;
            }
            if (start == pos_) {
                error("expected exponent");
            }
            int e = std::stoi(s_.substr(start, pos_ - start));
            return {base.num.pow(e), base.den.pow(e)};
        }
        return base;
    }

    Frac atom() {
        skip();
        if (pos_ >= s_.size()) {
            error("unexpected end of input");
        }
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Frac inner = expr();
            if (!peek(')')) {
                error("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return neg(power());
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
                ++pos_;
            }
            return {Poly(Rat(Int(s_.substr(start, pos_ - start)))), Poly(1)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])) != 0) {
                ++pos_;
            }
            std::string name = s_.substr(start, pos_ - start);
            for (int v = 0; v < kMaxVars; ++v) {
                if (name == var_name(v)) {
                    return {Poly::var(v), Poly(1)};
                }
            }
            pos_ = start;
            error("unknown variable '" + name + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

std::pair<Poly, Poly> parse_fraction(const std::string& text) {
    Frac f = Parser(text).parse();
    if (f.den.is_constant()) {
        Rat d = f.den.constant_term();
        return {f.num * Poly(1 / d), Poly(1)};
    }
    return {f.num, f.den};
}

Poly parse_poly(const std::string& text) {
    auto [num, den] = parse_fraction(text);
    if (!den.is_constant()) {
        fail(ErrorKind::ParseError, "\"" + text + "\" is not a polynomial");
    }
    return num;
}

} // namespace mvtop
