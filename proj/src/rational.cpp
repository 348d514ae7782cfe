#include "admgraph/rational.hpp"

#include <cctype>

#include "admgraph/error.hpp"

namespace admgraph {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_fraction(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    return Rational(mpq_class(numerator, denominator));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    value_ /= other.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

Rational pow(const Rational& base, unsigned exponent) {
    Rational out(1);
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    return Rational::from_fraction(n, d);
}

Rational parse_rational(std::string_view text) {
    auto r = try_parse_rational(text);
    if (!r) throw Error(ErrorCode::BadRational, "bad rational literal \"" + std::string(text) + "\"");
    return *r;
}

const Rational& ExtendedRational::value() const {
    if (!value_) throw Error(ErrorCode::OutOfRange, "extended rational is infinite");
    return *value_;
}

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadRational: return "bad_rational";
        case ErrorCode::DivisionByZero: return "division_by_zero";
        case ErrorCode::DuplicateId: return "duplicate_id";
        case ErrorCode::UnknownVertex: return "unknown_vertex";
        case ErrorCode::UnknownEdge: return "unknown_edge";
        case ErrorCode::DisconnectedGraph: return "disconnected_graph";
        case ErrorCode::SelfLoop: return "self_loop";
        case ErrorCode::NonpositiveLength: return "nonpositive_length";
        case ErrorCode::OutOfRange: return "out_of_range";
        case ErrorCode::DegreeMinusTwo: return "degree_minus_two";
        case ErrorCode::SingularSystem: return "singular_system";
        case ErrorCode::ConstancyViolation: return "constancy_violation";
        case ErrorCode::PropertyViolation: return "property_violation";
        case ErrorCode::InvolutionMalformed: return "involution_malformed";
        case ErrorCode::AxiomViolation: return "axiom_violation";
        case ErrorCode::FixedVertex: return "fixed_vertex";
        case ErrorCode::NotSimpleRestriction: return "not_simple_restriction";
        case ErrorCode::NotHyperellipticConfiguration: return "not_hyperelliptic_configuration";
        case ErrorCode::PolarizationShape: return "polarization_shape";
        case ErrorCode::NotMultilinear: return "not_multilinear";
        case ErrorCode::PoleAtSpecialization: return "pole_at_specialization";
        case ErrorCode::EnumerationCap: return "enumeration_cap";
        case ErrorCode::MissingInvolution: return "missing_involution";
        case ErrorCode::NotTypeZero: return "not_type_zero";
        case ErrorCode::UnexpectedComponentCount: return "unexpected_component_count";
        case ErrorCode::GenusOutOfRange: return "genus_out_of_range";
        case ErrorCode::GenusBelowThree: return "genus_below_three";
        case ErrorCode::InvalidConfiguration: return "invalid_configuration";
        case ErrorCode::MalformedJson: return "malformed_json";
        case ErrorCode::SchemaError: return "schema_error";
        case ErrorCode::InfeasibleBounds: return "infeasible_bounds";
    }
    return "unknown";
}

}  // namespace admgraph
