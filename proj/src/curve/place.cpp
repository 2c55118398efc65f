#include "mvtop/curve/place.hpp"

#include "mvtop/algebra/factor.hpp"
#include "mvtop/algebra/poly.hpp"
#include "mvtop/error.hpp"

namespace mvtop {

Place Place::infinity() {
    Place p;
    p.infinite_ = true;
    return p;
}

Place Place::finite(const UniPoly& irreducible) {
    if (irreducible.degree() < 1) {
        fail(ErrorKind::InvalidArgument, "a place needs a nonconstant polynomial");
    }
    Place p;
    p.poly_ = irreducible.monic();
    return p;
}

Place Place::rational(const Rat& value) { return finite(UniPoly::linear_root(value)); }

Rat Place::value() const {
    if (!is_rational() || infinite_) {
        fail(ErrorKind::InvalidArgument, "place " + to_string() + " has no rational value");
    }
    return -poly_.coeff(0);
}

std::string Place::to_string() const { return infinite_ ? "inf" : poly_.to_string(); }

int Place::valuation(const UniPoly& p) const {
    if (p.is_zero()) {
        fail(ErrorKind::ZeroPolynomial, "valuation of zero");
    }
    return infinite_ ? -p.degree() : p.multiplicity_of(poly_);
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.infinite_ != b.infinite_) {
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.poly_ <=> b.poly_;
}

Place parse_place(const std::string& text) {
    std::string trimmed;
    for (char c : text) {
        if (c != ' ') {
            trimmed += c;
        }
    }
    if (trimmed == "inf") {
        return Place::infinity();
    }
    UniPoly p = parse_poly(text).to_uni(VX);
    if (p.degree() < 1) {
        fail(ErrorKind::ParseError, "place \"" + text + "\" is constant");
    }
    auto fs = factor_uni(p);
    if (fs.size() != 1 || fs[0].multiplicity != 1) {
        fail(ErrorKind::ParseError, "place \"" + text + "\" is not irreducible");
    }
    return Place::finite(p);
}

} // namespace mvtop
