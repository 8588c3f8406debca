#pragma once

#include <stdexcept>
#include <string>

namespace nsf {

/// Base class for every error the library raises on a contract violation.
struct CalcError : std::runtime_error {
    explicit CalcError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : CalcError {
    DivisionByZero() : CalcError("division by zero") {}
};

/// Inversion requested outside a quadratic subfield Q(sqrt(n)).
struct UnsupportedInversion : CalcError {
    explicit UnsupportedInversion(const std::string& what_value)
        : CalcError("inversion not supported outside a quadratic field: " + what_value) {}
};

struct VariableMismatch : CalcError {
    explicit VariableMismatch(const std::string& msg) : CalcError("polynomial variable mismatch: " + msg) {}
};

struct DecompositionMismatch : CalcError {
    explicit DecompositionMismatch(const std::string& msg) : CalcError("tensor decomposition mismatch: " + msg) {}
};

struct NonHomogeneous : CalcError {
    NonHomogeneous() : CalcError("element mixes weight levels") {}
};

struct UnrepresentableRoot : CalcError {
    explicit UnrepresentableRoot(const std::string& disc)
        : CalcError("curve parameter requires a root outside the scalar ring, discriminant = " + disc) {}
};

struct KernelDimensionUnexpected : CalcError {
    explicit KernelDimensionUnexpected(const std::string& msg)
        : CalcError("unexpected Gram kernel dimension: " + msg) {}
};

struct ImpurityError : CalcError {
    explicit ImpurityError(const std::string& msg)
        : CalcError("bimodule reduction mixes parity classes: " + msg) {}
};

struct AmbiguousParity : CalcError {
    explicit AmbiguousParity(const std::string& msg)
        : CalcError("both parity summands vanish: " + msg) {}
};

struct DepthMismatch : CalcError {
    explicit DepthMismatch(const std::string& msg)
        : CalcError("density projection depth mismatch: " + msg) {}
};

struct ParseError : CalcError {
    explicit ParseError(const std::string& msg) : CalcError("parse error: " + msg) {}
};

}  // namespace nsf
