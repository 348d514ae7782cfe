#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "admgraph/hyperelliptic.hpp"
#include "admgraph/polynomial.hpp"

namespace admgraph {

enum class Strategy { Definition, Symmetric };

struct EnumerationOptions {
    /// Subset enumeration refuses graphs with more edge classes than this (EnumerationCap).
    std::size_t max_classes = 24;
};

/// Sum of X_S over the sz(G)-subsets S of classes whose restriction is semisimple of size sz(G).
/// Symmetric builds the same polynomial from the disjoint-class expansion on each irreducible
/// component and multiplies the components together.
MultiPoly l_polynomial(const HyperellipticGraph& h, Strategy strategy = Strategy::Definition,
                       const EnumerationOptions& options = {});

/// Sum of (nu - 2) X_S over the (sz(G)+1)-subsets S whose restriction has a single non-fixed
/// vertex class of valence nu.
MultiPoly m_polynomial(const HyperellipticGraph& h, Strategy strategy = Strategy::Definition,
                       const EnumerationOptions& options = {});

/// Throws DegreeMinusTwo, or PolarizationShape unless d is invariant with coefficient
/// valence(v) - 2 at every non-fixed vertex.
void check_polarization_shape(const HyperellipticGraph& h, const Divisor& d);

/// Closed form of the admissible constant as a rational function of the class lengths:
/// sum_e (2/3 k + w(e)(deg - w(e))/(deg + 2)) X_e + (2/3) k M/L with k = deg/(deg + 2).
RationalFn epsilon_closed_form_fn(const HyperellipticGraph& h, const Divisor& d,
                                  const EnumerationOptions& options = {});

/// The closed form evaluated at the lengths carried by h.
Rational epsilon_closed_form(const HyperellipticGraph& h, const Divisor& d, const EnumerationOptions& options = {});

/// Closed form evaluated at explicit class lengths (keys are class ids).
Rational epsilon_closed_form(const HyperellipticGraph& h, const Divisor& d,
                             const std::map<std::string, Rational>& lengths, const EnumerationOptions& options = {});

/// Rebuilds h with the given class lengths (both members of a class get the same length).
HyperellipticGraph with_class_lengths(const HyperellipticGraph& h, const std::map<std::string, Rational>& lengths);

}  // namespace admgraph
