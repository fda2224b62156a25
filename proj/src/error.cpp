#include "padicop/error.hpp"

namespace padicop {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByHigherValuation: return "DivisionByHigherValuation";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::NotPrincipal: return "NotPrincipal";
    case ErrorKind::OutOfConvergenceDomain: return "OutOfConvergenceDomain";
    case ErrorKind::NotASimpleRoot: return "NotASimpleRoot";
    case ErrorKind::DegenerateReduction: return "DegenerateReduction";
    case ErrorKind::ResidueEigenvalueDeficit: return "ResidueEigenvalueDeficit";
    case ErrorKind::RepeatedResidueEigenvalue: return "RepeatedResidueEigenvalue";
    case ErrorKind::NormTooLarge: return "NormTooLarge";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::SpectrumNotInPZp: return "SpectrumNotInPZp";
    case ErrorKind::NotPrincipalSpectrum: return "NotPrincipalSpectrum";
    }
    return "Unknown";
}

bool is_refusal(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::DivisionByHigherValuation:
    case ErrorKind::NotPrincipal:
    case ErrorKind::OutOfConvergenceDomain:
    case ErrorKind::NotASimpleRoot:
    case ErrorKind::DegenerateReduction:
    case ErrorKind::ResidueEigenvalueDeficit:
    case ErrorKind::RepeatedResidueEigenvalue:
    case ErrorKind::NormTooLarge:
    case ErrorKind::CertificationFailed:
    case ErrorKind::SpectrumNotInPZp:
    case ErrorKind::NotPrincipalSpectrum:
        return true;
    default:
        return false;
    }
}

bool is_precision_exhaustion(ErrorKind kind) noexcept
{
    return kind == ErrorKind::InsufficientPrecision || kind == ErrorKind::PrecisionExceeded;
}

} // namespace padicop
