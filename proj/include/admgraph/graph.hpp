#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "admgraph/rational.hpp"

namespace admgraph {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;
    Rational length{1};

    bool is_loop() const { return u == v; }
    bool touches(const VertexId& x) const { return u == x || v == x; }
    /// The endpoint opposite to `end`; for loops returns `end`.
    const VertexId& other(const VertexId& end) const { return end == u ? v : u; }
};

/// Finite multigraph with exact edge lengths. Ids are opaque strings.
///
/// Construction only checks referential integrity and id uniqueness; loops, nonpositive
/// lengths and disconnectedness are reported by validate_graph() and rejected by the
/// analytic code through require_analytic().
class MetrizedGraph {
public:
    MetrizedGraph() = default;
    MetrizedGraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    static MetrizedGraph one_point(VertexId v) { return MetrizedGraph({std::move(v)}, {}); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const VertexId& v) const { return vertex_index_.count(v) != 0; }
    bool has_edge(const EdgeId& e) const { return edge_index_.count(e) != 0; }
    std::size_t vertex_index(const VertexId& v) const;
    std::size_t edge_index(const EdgeId& e) const;
    const Edge& edge(const EdgeId& e) const { return edges_[edge_index(e)]; }

    /// Edges with an end at v; a loop is listed once.
    std::vector<EdgeId> incident_edges(const VertexId& v) const;
    /// Number of edge-ends at v (loops count twice).
    int valence(const VertexId& v) const;

    std::set<EdgeId> edge_ids() const;
    Rational total_length() const;

    /// Vertex sets of the connected components after removing `removed` edges.
    std::vector<std::set<VertexId>> components(const std::set<EdgeId>& removed = {}) const;
    bool is_connected() const { return vertex_count() > 0 && components().size() == 1; }
    /// First Betti number E - V + (#components).
    long betti_number() const;

    /// Same vertex set and same edges (id, unordered endpoints, length).
    friend bool operator==(const MetrizedGraph& a, const MetrizedGraph& b);

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::map<VertexId, std::size_t> vertex_index_;
    std::map<EdgeId, std::size_t> edge_index_;
};

struct ValidationReport {
    bool connected = false;
    std::vector<std::string> issues;

    bool valid() const { return issues.empty(); }
};

ValidationReport validate_graph(const MetrizedGraph& g);

/// Throws unless g is connected, loop-free and has positive lengths.
void require_analytic(const MetrizedGraph& g);

/// Rational coefficients on vertices; zero coefficients are not stored.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(const std::map<VertexId, Rational>& coefficients);

    Rational coefficient(const VertexId& v) const;
    void set(const VertexId& v, const Rational& value);
    void add(const VertexId& v, const Rational& value) { set(v, coefficient(v) + value); }
    Rational degree() const;
    const std::map<VertexId, Rational>& coefficients() const { return coefficients_; }
    bool is_zero() const { return coefficients_.empty(); }

    /// Throws UnknownVertex if the support leaves g.
    void check_support(const MetrizedGraph& g) const;

    friend bool operator==(const Divisor&, const Divisor&) = default;

private:
    std::map<VertexId, Rational> coefficients_;
};

using VertexMap = std::map<VertexId, VertexId>;

/// A graph together with the surjection from the vertices of its source graph.
struct GraphMap {
    MetrizedGraph graph;
    VertexMap vertex_map;
};

/// Collapses every edge in s. Surviving edges keep ids and lengths; a merged vertex is named
/// by the smallest id it absorbs. Edges whose ends merge are kept as loops.
GraphMap contract(const MetrizedGraph& g, const std::set<EdgeId>& s);

/// Contracts the complement of s.
GraphMap restrict(const MetrizedGraph& g, const std::set<EdgeId>& s);

Divisor push_divisor(const Divisor& d, const VertexMap& m);

/// Disjoint union with v2 identified to v1 (the joined vertex keeps the name v1).
MetrizedGraph one_point_sum(const MetrizedGraph& g1, const VertexId& v1, const MetrizedGraph& g2,
                            const VertexId& v2);

/// Irreducible components (blocks), ordered by smallest vertex id then smallest edge id.
/// A one-point graph has the empty decomposition.
std::vector<MetrizedGraph> irreducible_decomposition(const MetrizedGraph& g);

/// Cut vertices of a connected graph.
std::set<VertexId> cut_vertices(const MetrizedGraph& g);

struct Subdivision {
    MetrizedGraph graph;
    VertexId midpoint;
    EdgeId first;   ///< from edge.u, length t
    EdgeId second;  ///< to edge.v, length l - t
};

/// Splits e at arc length t from e.u through a fresh vertex.
Subdivision subdivide_edge(const MetrizedGraph& g, const EdgeId& e, const Rational& t);

/// Same vertices, listed edges removed.
MetrizedGraph delete_edges(const MetrizedGraph& g, const std::set<EdgeId>& removed);

/// Subgraph spanned by the given edges (vertices are their endpoints).
MetrizedGraph edge_subgraph(const MetrizedGraph& g, const std::set<EdgeId>& edges);

/// Returns `base` if unused in `taken`, otherwise base + "_" + k for the first free k.
std::string fresh_id(const std::string& base, const std::set<std::string>& taken);

}  // namespace admgraph
