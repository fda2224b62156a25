#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padicop {

enum class ErrorKind {
    InvalidArgument,
    PrimeMismatch,
    DimensionMismatch,
    DivisionByHigherValuation,
    InsufficientPrecision,
    PrecisionExceeded,
    NotPrincipal,
    OutOfConvergenceDomain,
    NotASimpleRoot,
    DegenerateReduction,
    ResidueEigenvalueDeficit,
    RepeatedResidueEigenvalue,
    NormTooLarge,
    CertificationFailed,
    SpectrumNotInPZp,
    NotPrincipalSpectrum,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Hypothesis violations (a mathematical refusal) as opposed to bad input or
// exhausted precision.
bool is_refusal(ErrorKind kind) noexcept;
bool is_precision_exhaustion(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace padicop
