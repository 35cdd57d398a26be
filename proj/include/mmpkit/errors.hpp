#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmpkit {

// Mathematical precondition failures raised by the library layer.
enum class Errc {
    InvalidArgument,
    DimensionMismatch,
    SingularMatrix,
    NotSymmetric,
    ZeroVector,
    NotPrimitive,
    InvalidCone,
    NotFullDimensional,
    NotStronglyConvex,
    NotInCone,
    NotQGorenstein,
    InvalidGraph,
    Disconnected,
    NotContractible,
    InvalidSite,
    InvalidBoundary,
    InvalidLattice,
    NonIntegralGenus,
    UnboundedSearch,
    NotMinusOneClass,
    NotRank2,
    EmptyCurveList,
    ConeNotPointed,
    InsufficientSamples,
    NegativeCoefficient,
    CoefficientOutOfRange,
};

constexpr std::string_view to_string(Errc e) {
    switch (e) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::InvalidCone: return "InvalidCone";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::NotStronglyConvex: return "NotStronglyConvex";
    case Errc::NotInCone: return "NotInCone";
    case Errc::NotQGorenstein: return "NotQGorenstein";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotContractible: return "NotContractible";
    case Errc::InvalidSite: return "InvalidSite";
    case Errc::InvalidBoundary: return "InvalidBoundary";
    case Errc::InvalidLattice: return "InvalidLattice";
    case Errc::NonIntegralGenus: return "NonIntegralGenus";
    case Errc::UnboundedSearch: return "UnboundedSearch";
    case Errc::NotMinusOneClass: return "NotMinusOneClass";
    case Errc::NotRank2: return "NotRank2";
    case Errc::EmptyCurveList: return "EmptyCurveList";
    case Errc::ConeNotPointed: return "ConeNotPointed";
    case Errc::InsufficientSamples: return "InsufficientSamples";
    case Errc::NegativeCoefficient: return "NegativeCoefficient";
    case Errc::CoefficientOutOfRange: return "CoefficientOutOfRange";
    }
    return "Unknown";
}

class MathError : public std::runtime_error {
public:
    MathError(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

} // namespace mmpkit
