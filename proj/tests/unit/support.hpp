#pragma once

#include "mvtop/algebra/poly.hpp"

#include <catch_amalgamated.hpp>

namespace Catch {
template <> struct StringMaker<mvtop::Poly> {
    static std::string convert(const mvtop::Poly& p) { return p.to_string(); }
};
template <> struct StringMaker<mvtop::UniPoly> {
    static std::string convert(const mvtop::UniPoly& p) { return p.to_string(); }
};
} // namespace Catch

#include "mvtop/error.hpp"

#include <optional>

template <class F> std::optional<mvtop::ErrorKind> error_kind(F&& fn) {
    try {
        fn();
    } catch (const mvtop::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}
