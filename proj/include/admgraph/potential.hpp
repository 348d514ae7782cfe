#pragma once

#include <map>
#include <vector>

#include "admgraph/graph.hpp"
#include "admgraph/linalg.hpp"
#include "admgraph/rational.hpp"

namespace admgraph {

/// Point masses on vertices plus a uniform density on each edge.
struct Measure {
    std::map<VertexId, Rational> vertex_masses;
    std::map<EdgeId, Rational> edge_densities;

    Rational mass(const VertexId& v) const;
    Rational density(const EdgeId& e) const;
    Rational total_mass(const MetrizedGraph& g) const;
};

Rational effective_resistance(const MetrizedGraph& g, const VertexId& p, const VertexId& q);

/// Resistance between the ends of e with the interior of e removed; infinite on bridges.
ExtendedRational cross_resistance(const MetrizedGraph& g, const EdgeId& e);

/// Vertex mass 1 - valence/2, density 1/(l_e + r_e) (zero on bridges).
Measure canonical_measure(const MetrizedGraph& g);

/// (delta_D + 2 * canonical) / (deg D + 2). Throws DegreeMinusTwo.
Measure admissible_measure(const MetrizedGraph& g, const Divisor& d);

/// f(s) = f(u) + slope*s + (second_derivative/2)*s^2 on an edge, s measured from edge.u.
struct EdgeQuadratic {
    Rational second_derivative;
    Rational start_slope;
};

/// Continuous function on the graph, quadratic on each edge.
struct PiecewisePotential {
    std::map<VertexId, Rational> vertex_values;
    std::map<EdgeId, EdgeQuadratic> edge_terms;

    Rational at(const VertexId& v) const;
    /// Value at arc length s from edge.u along edge.
    Rational at(const Edge& edge, const Rational& s) const;
};

/// Exact integral of f against mu.
Rational integrate(const MetrizedGraph& g, const PiecewisePotential& f, const Measure& mu);

/// Green's function g_(G;D) for every vertex source at once.
///
/// Construction solves the grounded Laplacian once, normalizes each source so that the
/// integral against mu vanishes, and then re-checks symmetry, the vertex flux balance,
/// unit mass, normalization and the constancy of g(D,y) + g(y,y). A failed check throws
/// PropertyViolation or ConstancyViolation.
class GreenFunction {
public:
    GreenFunction(const MetrizedGraph& g, const Divisor& d);

    const MetrizedGraph& graph() const { return graph_; }
    const Divisor& divisor() const { return divisor_; }
    const Measure& measure() const { return measure_; }

    Rational pairing(const VertexId& p, const VertexId& q) const;
    /// g(D, y) = sum_i a_i g(P_i, y).
    Rational pairing(const Divisor& d, const VertexId& y) const;
    /// g(D, D).
    Rational pairing(const Divisor& a, const Divisor& b) const;
    PiecewisePotential potential(const VertexId& source) const;

    /// c(G; D), the common value of g(D,y) + g(y,y).
    Rational constant() const { return constant_; }
    /// 2 deg(D) c - g(D, D).
    Rational epsilon() const;

private:
    void verify() const;

    MetrizedGraph graph_;
    Divisor divisor_;
    Measure measure_;
    Matrix values_;  // values_(source, y)
    Rational constant_;
};

PiecewisePotential green_function(const MetrizedGraph& g, const Divisor& d, const VertexId& source);
Rational green_pairing(const MetrizedGraph& g, const Divisor& d, const VertexId& p, const VertexId& q);

struct EpsilonValue {
    Rational epsilon;
    Rational c;
};

EpsilonValue epsilon_numeric(const MetrizedGraph& g, const Divisor& d);

}  // namespace admgraph
