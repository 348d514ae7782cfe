#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "admgraph/rational.hpp"

namespace admgraph {

/// Sorted multiset of variable names.
using Monomial = std::vector<std::string>;

/// Graded lexicographic order: lower total degree first, then lexicographic on the sorted names.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals. Zero coefficients are never stored.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational& constant);
    static MultiPoly variable(const std::string& name);
    static MultiPoly monomial(Monomial m, const Rational& coefficient = Rational(1));

    const std::map<Monomial, Rational, MonomialLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;
    std::set<std::string> variables() const;
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    /// Every monomial uses distinct variables.
    bool is_multilinear() const;

    void add_term(Monomial m, const Rational& coefficient);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Missing variables evaluate to zero.
    Rational evaluate(const std::map<std::string, Rational>& values) const;
    /// Substitute 0 for `var`.
    MultiPoly specialize_zero(const std::string& var) const;
    /// P with p = var * P + (terms free of var). Throws NotMultilinear if var appears squared.
    MultiPoly coefficient_poly(const std::string& var) const;
    /// Renames variables; names mapped to the same target are multiplied together.
    MultiPoly rename(const std::map<std::string, std::string>& names) const;

    std::string to_string() const;

private:
    std::map<Monomial, Rational, MonomialLess> terms_;
};

/// k-th elementary symmetric polynomial; 1 for k == 0 and 0 for k < 0 or k > vars.size().
MultiPoly elementary_symmetric(const std::vector<std::string>& vars, int k);

/// Quotient of two polynomials; equality is decided by cross-multiplication.
class RationalFn {
public:
    RationalFn(MultiPoly numerator, MultiPoly denominator = MultiPoly(Rational(1)));

    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }

    /// Throws PoleAtSpecialization when the denominator vanishes.
    Rational evaluate(const std::map<std::string, Rational>& values) const;
    /// Substitutes 0 for var, first cancelling common factors of var from both sides.
    /// Throws PoleAtSpecialization if the denominator still vanishes identically.
    RationalFn specialize_zero(const std::string& var) const;

    friend bool operator==(const RationalFn& a, const RationalFn& b);

private:
    MultiPoly num_;
    MultiPoly den_;
};

}  // namespace admgraph
