#include "mvtop/curve/divisor.hpp"

#include "mvtop/error.hpp"

#include <cctype>

namespace mvtop {

Divisor Divisor::point(const Place& p, int mult) {
    Divisor d;
    d.add(p, mult);
    return d;
}

int Divisor::mult(const Place& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

std::set<Place> Divisor::support() const {
    std::set<Place> out;
    for (const auto& [p, m] : terms_) {
        out.insert(p);
    }
    return out;
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [p, m] : terms_) {
        d += m * p.degree();
    }
    return d;
}

void Divisor::add(const Place& p, int m) { set(p, mult(p) + m); }

void Divisor::set(const Place& p, int m) {
    if (m < 0) {
        fail(ErrorKind::InvalidArgument, "negative multiplicity at " + p.to_string());
    }
    if (m == 0) {
        terms_.erase(p);
    } else {
        terms_[p] = m;
    }
}

Divisor Divisor::without(const std::set<Place>& places) const {
    Divisor out;
    for (const auto& [p, m] : terms_) {
        if (places.count(p) == 0) {
            out.terms_.emplace(p, m);
        }
    }
    return out;
}

Divisor Divisor::scaled(int k) const {
    Divisor out;
    for (const auto& [p, m] : terms_) {
        out.set(p, m * k);
    }
    return out;
}

std::string Divisor::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [p, m] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "[" + p.to_string() + "]";
        if (m != 1) {
            out += "^" + std::to_string(m);
        }
    }
    return out;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [p, m] : b.terms_) {
        out.add(p, m);
    }
    return out;
}

Divisor sup_divisor(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [p, m] : b.terms()) {
        out.set(p, std::max(m, a.mult(p)));
    }
    return out;
}

Divisor inf_divisor(const Divisor& a, const Divisor& b) {
    Divisor out;
    for (const auto& [p, m] : a.terms()) {
        int n = std::min(m, b.mult(p));
        if (n > 0) {
            out.set(p, n);
        }
    }
    return out;
}

bool leq(const Divisor& a, const Divisor& b) {
    for (const auto& [p, m] : a.terms()) {
        if (m > b.mult(p)) {
            return false;
        }
    }
    return true;
}

Divisor parse_divisor(const std::string& text) {
    Divisor out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) {
            ++i;
        }
    };
    auto error = [&](const std::string& what) {
        fail(ErrorKind::ParseError,
             "divisor \"" + text + "\" at column " + std::to_string(i + 1) + ": " + what);
    };
    skip();
    if (i == text.size() || text.substr(i) == "0") {
        return out;
    }
    while (true) {
        skip();
        if (i >= text.size() || text[i] != '[') {
            error("expected '['");
        }
        std::size_t close = text.find(']', i);
        if (close == std::string::npos) {
            error("missing ']'");
        }
        Place p = parse_place(text.substr(i + 1, close - i - 1));
        i = close + 1;
        skip();
        int m = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
                ++i;
            }
            if (start == i) {
                error("expected multiplicity");
            }
            m = std::stoi(text.substr(start, i - start));
            if (m <= 0) {
                error("multiplicity must be positive");
            }
        }
        out.add(p, m);
        skip();
        if (i == text.size()) {
            return out;
        }
        if (text[i] != '+') {
            error("expected '+'");
        }
        ++i;
    }
}

} // namespace mvtop
