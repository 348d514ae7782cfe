#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "admgraph/graph.hpp"

namespace admgraph {

/// Order-two symmetry of a graph. Ids missing from a map are fixed.
struct Involution {
    std::map<VertexId, VertexId> vertex_map;
    std::map<EdgeId, EdgeId> edge_map;

    VertexId vertex(const VertexId& v) const;
    EdgeId edge(const EdgeId& e) const;
};

/// Checks that i is an order-two automorphism of g compatible with endpoints and lengths.
/// With allow_fixed_edges == false an edge mapped to itself is also rejected.
void check_involution(const MetrizedGraph& g, const Involution& i, bool allow_fixed_edges = true);

enum class EdgeKind { Disjoint, OneJointed, TwoJointed };

std::string_view edge_kind_name(EdgeKind kind);

/// An orbit {e, i(e)}; named by its lexicographically smaller member.
struct EdgeClass {
    std::string id;
    std::vector<EdgeId> members;
    EdgeKind kind;
    Rational length;
};

/// A validated hyperelliptic graph with its derived structure.
class HyperellipticGraph {
public:
    const MetrizedGraph& graph() const { return graph_; }
    const Involution& involution() const { return involution_; }

    bool is_fixed(const VertexId& v) const { return fixed_.count(v) != 0; }
    const std::set<VertexId>& fixed_vertices() const { return fixed_; }
    std::set<VertexId> non_fixed_vertices() const;
    /// Orbit name of a vertex: the smaller of v and i(v).
    VertexId vertex_class(const VertexId& v) const;

    const std::vector<EdgeClass>& classes() const { return classes_; }
    const EdgeClass& edge_class(const std::string& class_id) const;
    const std::string& class_of(const EdgeId& e) const;
    EdgeKind kind(const EdgeId& e) const { return edge_class(class_of(e)).kind; }
    std::set<std::string> class_ids() const;
    std::map<std::string, Rational> class_lengths() const;

    /// G / <i>: vertices are vertex orbits, edges are edge classes.
    const MetrizedGraph& quotient() const { return quotient_; }

    friend HyperellipticGraph validate_hyperelliptic(const MetrizedGraph& g, const Involution& i);

private:
    HyperellipticGraph() = default;

    MetrizedGraph graph_;
    Involution involution_;
    std::set<VertexId> fixed_;
    std::vector<EdgeClass> classes_;
    std::map<std::string, std::size_t> class_index_;
    std::map<EdgeId, std::string> class_of_;
    MetrizedGraph quotient_;
};

/// Checks the hyperelliptic axioms: (1) no loops, (2) no edge fixed by the involution,
/// (3) non-fixed vertices carry at least three edge-ends, (4) the quotient is a tree.
/// Throws AxiomViolation naming the clause, InvolutionMalformed, or DisconnectedGraph.
HyperellipticGraph validate_hyperelliptic(const MetrizedGraph& g, const Involution& i);

std::map<EdgeId, EdgeKind> classify_edges(const HyperellipticGraph& h);

/// Irreducible components with the restricted involution, in decomposition order.
std::vector<HyperellipticGraph> irreducible_components(const HyperellipticGraph& h);

bool is_simple(const HyperellipticGraph& h);
bool is_semisimple(const HyperellipticGraph& h);

/// Sum over components of 1 (simple) or #one-jointed classes - 1.
int graph_size(const HyperellipticGraph& h);

struct NuCounts {
    int nu0 = 0;  ///< disjoint edges at v
    int nu1 = 0;  ///< one-jointed edges at v
    int nu = 0;
};

/// Throws FixedVertex when v is fixed.
NuCounts nu_counts(const HyperellipticGraph& h, const VertexId& v);

struct HyperellipticMap {
    HyperellipticGraph graph;
    VertexMap vertex_map;
};

/// Contract every edge of the listed classes; the involution is transported.
HyperellipticMap contract_classes(const HyperellipticGraph& h, const std::set<std::string>& classes);
/// Contract every class not listed.
HyperellipticMap restrict_classes(const HyperellipticGraph& h, const std::set<std::string>& classes);

bool is_invariant(const HyperellipticGraph& h, const Divisor& d);

/// min(a, b) where D pushed to the restriction onto one class is aP + bQ.
/// Throws PolarizationShape if d is not invariant, NotSimpleRestriction if the restriction is
/// not the simple graph.
Rational w_weight(const HyperellipticGraph& h, const Divisor& d, const std::string& class_id);

struct NormalizedFiber {
    HyperellipticGraph graph;
    std::set<VertexId> removed_vertices;
    std::set<VertexId> inserted_vertices;
};

/// Turns the dual graph of a fiber with only type-zero nodes into a hyperelliptic graph:
/// every edge fixed by the involution gets a fixed midpoint, then every non-fixed vertex with
/// exactly two edge-ends is smoothed away. Throws NotHyperellipticConfiguration.
NormalizedFiber normalize_fiber(const MetrizedGraph& dual, const Involution& i);

/// Transport of a divisor to the normalized graph; removed vertices must carry coefficient 0.
Divisor normalize_divisor(const NormalizedFiber& fiber, const Divisor& d);

}  // namespace admgraph
