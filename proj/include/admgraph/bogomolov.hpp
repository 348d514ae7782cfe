#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "admgraph/graph.hpp"
#include "admgraph/hyperelliptic.hpp"

namespace admgraph {

/// Dual graph of a semistable fiber: vertices are components (with geometric genus), edges
/// are nodes. Loops and involution-fixed edges are allowed.
struct FiberConfiguration {
    MetrizedGraph dual;
    std::map<VertexId, int> genus;  ///< absent means 0
    std::optional<Involution> involution;
    int g = 0;

    int genus_of(const VertexId& v) const;
};

/// Checks genus bookkeeping (sum of genera + Betti number = g), connectivity, g >= 2 and
/// compatibility of the involution with incidences and genera.
void validate_fiber(const FiberConfiguration& cfg);

/// Sum of genera plus first Betti number of the subgraph spanned by `vertices` using the
/// edges of cfg.dual not listed in `removed`.
int arithmetic_genus(const FiberConfiguration& cfg, const std::set<VertexId>& vertices,
                     const std::set<EdgeId>& removed = {});

struct NodeClass {
    int type = 0;                 ///< i >= 1, or 0
    std::optional<int> subtype;   ///< j for type-zero nodes when known
};

/// Type i of a node: 0 if deleting it keeps the dual graph connected, else the smaller
/// arithmetic genus of the two sides.
NodeClass node_type(const FiberConfiguration& cfg, const EdgeId& node);

/// Subtype j of a type-zero node: 0 if the involution fixes it, else the smaller arithmetic
/// genus of the two pieces left after deleting the node and its image.
/// Throws MissingInvolution, NotTypeZero or UnexpectedComponentCount.
NodeClass node_subtype(const FiberConfiguration& cfg, const EdgeId& node);

/// xi[j] for 0 <= j <= (g-1)/2 and delta[i-1] for 1 <= i <= g/2.
struct InvariantCounts {
    int g = 0;
    std::vector<long> xi;
    std::vector<long> delta;

    static InvariantCounts zero(int g);
    long xi_at(int j) const { return xi.at(static_cast<std::size_t>(j)); }
    long delta_at(int i) const { return delta.at(static_cast<std::size_t>(i - 1)); }
    /// Number of type-zero nodes: xi0 + 2 sum_{j >= 1} xi_j.
    long delta0() const;
    bool all_zero() const;
    friend bool operator==(const InvariantCounts&, const InvariantCounts&) = default;
};

/// xi0 counts nodes of type (0,0); xi_j (j >= 1) counts pairs of nodes; delta_i counts nodes.
InvariantCounts count_invariants(const FiberConfiguration& cfg);

/// Self-intersection of the relative dualizing sheaf in terms of the counts (g >= 2).
Rational omega_self_intersection(const InvariantCounts& counts);

/// Upper bound for the admissible constant of one fiber (g >= 3).
Rational epsilon_fiber_upper(const InvariantCounts& counts);

/// The effective lower bound r0 (g >= 3, GenusBelowThree otherwise).
Rational r0_bound(const InvariantCounts& counts);

struct BoundTerm {
    std::string name;  ///< "xi0", "xi1", "delta1", ...
    long count = 0;
    Rational omega_coefficient;
    Rational epsilon_coefficient;
    Rational contribution;  ///< (g-1)(omega_coefficient - epsilon_coefficient) * count
};

struct RadicandReport {
    Rational radicand;
    Rational omega;
    Rational epsilon_upper;
    std::vector<BoundTerm> terms;
    std::vector<std::string> warnings;
};

/// (g-1)((omega, omega) - sum of fiber bounds); equal to r0_bound.
RadicandReport pairing_radicand(const InvariantCounts& counts);

/// Coefficient 2 genus(v) - 2 + valence(v) at every component.
Divisor canonical_polarization(const FiberConfiguration& cfg);

struct FiberEpsilon {
    Rational direct;             ///< Green's function solve on the dual graph
    Rational hyperelliptic_part; ///< closed form on the normalized type-zero part
    Rational tree_part;          ///< Green's function solve on the positive-type tree
};

/// Admissible constant of the canonically polarized dual graph, computed directly and as the
/// sum of the two contracted parts.
FiberEpsilon fiber_epsilon(const FiberConfiguration& cfg);

}  // namespace admgraph
