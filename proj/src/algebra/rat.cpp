#include "mvtop/algebra/rat.hpp"

#include "mvtop/error.hpp"

#include <cctype>

namespace mvtop {

Rat parse_rat(const std::string& text) {
    if (text.empty()) {
        fail(ErrorKind::ParseError, "empty rational literal");
    }
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        ++i;
    }
    bool slash = false;
    bool digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            digit = true;
        } else if (c == '/' && !slash && digit) {
            slash = true;
            digit = false;
        } else {
            fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
        }
    }
    if (!digit) {
        fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
    }
    std::string body = text[0] == '+' ? text.substr(1) : text;
    Rat r;
    if (r.set_str(body, 10) != 0 || r.get_den() == 0) {
        fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat rat_pow(const Rat& base, long exponent) {
    Rat result = 1;
    Rat b = base;
    if (exponent < 0) {
        if (b == 0) {
            fail(ErrorKind::InvalidArgument, "zero to a negative power");
        }
        b = 1 / b;
        exponent = -exponent;
    }
    while (exponent > 0) {
        if ((exponent & 1) != 0) {
            result *= b;
        }
        b *= b;
        exponent >>= 1;
    }
    return result;
}

Int height(const Rat& r) {
    Int n = abs(r.get_num());
    Int d = r.get_den();
    return n > d ? n : d;
}

} // namespace mvtop
