#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvtop {

enum class ErrorKind {
    ZeroPolynomial,
    VariableAbsent,
    DegreeCap,
    PrecisionExhausted,
    UnsupportedCurve,
    UnsupportedBoundary,
    NonSmoothFiberProduct,
    ConstantMapOverSupport,
    ConstantComponent,
    InteriorViolation,
    NonProperSource,
    NotOpenImmersion,
    NotEtale,
    NotNisnevich,
    GlueInadmissible,
    InconsistentInput,
    NoLift,
    MalformedTable,
    BudgetExceeded,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

    /// Instance outside the supported curve class (CLI exit status 2).
    [[nodiscard]] bool is_unsupported() const noexcept;

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

} // namespace mvtop
