#include "mvtop/error.hpp"

namespace mvtop {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::VariableAbsent: return "VariableAbsent";
    case ErrorKind::DegreeCap: return "DegreeCap";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::UnsupportedCurve: return "UnsupportedCurve";
    case ErrorKind::UnsupportedBoundary: return "UnsupportedBoundary";
    case ErrorKind::NonSmoothFiberProduct: return "NonSmoothFiberProduct";
    case ErrorKind::ConstantMapOverSupport: return "ConstantMapOverSupport";
    case ErrorKind::ConstantComponent: return "ConstantComponent";
    case ErrorKind::InteriorViolation: return "InteriorViolation";
    case ErrorKind::NonProperSource: return "NonProperSource";
    case ErrorKind::NotOpenImmersion: return "NotOpenImmersion";
    case ErrorKind::NotEtale: return "NotEtale";
    case ErrorKind::NotNisnevich: return "NotNisnevich";
    case ErrorKind::GlueInadmissible: return "GlueInadmissible";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::NoLift: return "NoLift";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

bool Error::is_unsupported() const noexcept {
    return kind_ == ErrorKind::UnsupportedCurve || kind_ == ErrorKind::UnsupportedBoundary ||
           kind_ == ErrorKind::NonSmoothFiberProduct || kind_ == ErrorKind::DegreeCap ||
           kind_ == ErrorKind::PrecisionExhausted || kind_ == ErrorKind::BudgetExceeded;
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

} // namespace mvtop
