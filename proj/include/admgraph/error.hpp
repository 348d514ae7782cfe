#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace admgraph {

enum class ErrorCode {
    BadRational,
    DivisionByZero,
    DuplicateId,
    UnknownVertex,
    UnknownEdge,
    DisconnectedGraph,
    SelfLoop,
    NonpositiveLength,
    OutOfRange,
    DegreeMinusTwo,
    SingularSystem,
    ConstancyViolation,
    PropertyViolation,
    InvolutionMalformed,
    AxiomViolation,
    FixedVertex,
    NotSimpleRestriction,
    NotHyperellipticConfiguration,
    PolarizationShape,
    NotMultilinear,
    PoleAtSpecialization,
    EnumerationCap,
    MissingInvolution,
    NotTypeZero,
    UnexpectedComponentCount,
    GenusOutOfRange,
    GenusBelowThree,
    InvalidConfiguration,
    MalformedJson,
    SchemaError,
    InfeasibleBounds,
};

/// Stable machine-readable name, used in CLI output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Hyperelliptic axiom failure; clause() is 1..4.
class AxiomViolation : public Error {
public:
    AxiomViolation(int clause, const std::string& message)
        : Error(ErrorCode::AxiomViolation, "axiom (" + std::to_string(clause) + "): " + message),
          clause_(clause) {}

    int clause() const noexcept { return clause_; }

private:
    int clause_;
};

}  // namespace admgraph
