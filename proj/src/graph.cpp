#include "admgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "admgraph/error.hpp"

namespace admgraph {

MetrizedGraph::MetrizedGraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i], i).second)
            throw Error(ErrorCode::DuplicateId, "duplicate vertex id \"" + vertices_[i] + "\"");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!edge_index_.emplace(e.id, i).second)
            throw Error(ErrorCode::DuplicateId, "duplicate edge id \"" + e.id + "\"");
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw Error(ErrorCode::UnknownVertex, "edge \"" + e.id + "\" references an unknown vertex");
    }
}

std::size_t MetrizedGraph::vertex_index(const VertexId& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex \"" + v + "\"");
    return it->second;
}

std::size_t MetrizedGraph::edge_index(const EdgeId& e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) throw Error(ErrorCode::UnknownEdge, "unknown edge \"" + e + "\"");
    return it->second;
}

std::vector<EdgeId> MetrizedGraph::incident_edges(const VertexId& v) const {
    vertex_index(v);
    std::vector<EdgeId> out;
    for (const auto& e : edges_)
        if (e.touches(v)) out.push_back(e.id);
    return out;
}

int MetrizedGraph::valence(const VertexId& v) const {
    vertex_index(v);
    int n = 0;
    for (const auto& e : edges_) {
        if (e.u == v) ++n;
        if (e.v == v) ++n;
    }
    return n;
}

std::set<EdgeId> MetrizedGraph::edge_ids() const {
    std::set<EdgeId> out;
    for (const auto& e : edges_) out.insert(e.id);
    return out;
}

Rational MetrizedGraph::total_length() const {
    Rational total;
    for (const auto& e : edges_) total += e.length;
    return total;
}

std::vector<std::set<VertexId>> MetrizedGraph::components(const std::set<EdgeId>& removed) const {
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges_) {
        if (removed.count(e.id)) continue;
        parent[find(vertex_index(e.u))] = find(vertex_index(e.v));
    }
    std::map<std::size_t, std::set<VertexId>> groups;
    for (std::size_t i = 0; i < vertices_.size(); ++i) groups[find(i)].insert(vertices_[i]);
    std::vector<std::set<VertexId>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
    return out;
}

long MetrizedGraph::betti_number() const {
    return static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) +
           static_cast<long>(components().size());
}

bool operator==(const MetrizedGraph& a, const MetrizedGraph& b) {
    if (std::set<VertexId>(a.vertices_.begin(), a.vertices_.end()) !=
        std::set<VertexId>(b.vertices_.begin(), b.vertices_.end()))
        return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (const auto& e : a.edges_) {
        if (!b.has_edge(e.id)) return false;
        const Edge& f = b.edge(e.id);
        bool same_ends = (e.u == f.u && e.v == f.v) || (e.u == f.v && e.v == f.u);
        if (!same_ends || e.length != f.length) return false;
    }
    return true;
}

ValidationReport validate_graph(const MetrizedGraph& g) {
    ValidationReport report;
    report.connected = g.is_connected();
    if (g.vertex_count() == 0) report.issues.push_back("empty graph");
    else if (!report.connected) report.issues.push_back("disconnected");
    for (const auto& e : g.edges()) {
        if (e.is_loop()) report.issues.push_back("self-loop on edge \"" + e.id + "\"");
        if (e.length.sign() <= 0) report.issues.push_back("nonpositive length on edge \"" + e.id + "\"");
    }
    return report;
}

void require_analytic(const MetrizedGraph& g) {
    for (const auto& e : g.edges()) {
        if (e.is_loop()) throw Error(ErrorCode::SelfLoop, "self-loop on edge \"" + e.id + "\"");
        if (e.length.sign() <= 0)
            throw Error(ErrorCode::NonpositiveLength, "nonpositive length on edge \"" + e.id + "\"");
    }
    if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
}

Divisor::Divisor(const std::map<VertexId, Rational>& coefficients) {
    for (const auto& [v, c] : coefficients) set(v, c);
}

Rational Divisor::coefficient(const VertexId& v) const {
    auto it = coefficients_.find(v);
    return it == coefficients_.end() ? Rational() : it->second;
}

void Divisor::set(const VertexId& v, const Rational& value) {
    if (value.is_zero()) coefficients_.erase(v);
    else coefficients_[v] = value;
}

Rational Divisor::degree() const {
    Rational total;
    for (const auto& [v, c] : coefficients_) total += c;
    return total;
}

void Divisor::check_support(const MetrizedGraph& g) const {
    for (const auto& [v, c] : coefficients_)
        if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "divisor supported on unknown vertex \"" + v + "\"");
}

GraphMap contract(const MetrizedGraph& g, const std::set<EdgeId>& s) {
    for (const auto& id : s) g.edge_index(id);

    const auto& verts = g.vertices();
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& id : s) {
        const Edge& e = g.edge(id);
        std::size_t a = find(g.vertex_index(e.u));
        std::size_t b = find(g.vertex_index(e.v));
        if (a == b) continue;
        // keep the lexicographically smallest name as the root
        if (verts[b] < verts[a]) std::swap(a, b);
        parent[b] = a;
    }

    GraphMap out;
    std::vector<VertexId> new_vertices;
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const VertexId& rep = verts[find(i)];
        out.vertex_map[verts[i]] = rep;
        if (seen.insert(rep).second) new_vertices.push_back(rep);
    }
    std::vector<Edge> new_edges;
    for (const auto& e : g.edges()) {
        if (s.count(e.id)) continue;
        new_edges.push_back(Edge{e.id, out.vertex_map.at(e.u), out.vertex_map.at(e.v), e.length});
    }
    out.graph = MetrizedGraph(std::move(new_vertices), std::move(new_edges));
    return out;
}

GraphMap restrict(const MetrizedGraph& g, const std::set<EdgeId>& s) {
    for (const auto& id : s) g.edge_index(id);
    std::set<EdgeId> complement;
    for (const auto& e : g.edges())
        if (!s.count(e.id)) complement.insert(e.id);
    return contract(g, complement);
}

Divisor push_divisor(const Divisor& d, const VertexMap& m) {
    Divisor out;
    for (const auto& [v, c] : d.coefficients()) {
        auto it = m.find(v);
        if (it == m.end()) throw Error(ErrorCode::UnknownVertex, "vertex \"" + v + "\" outside the map domain");
        out.add(it->second, c);
    }
    return out;
}

MetrizedGraph one_point_sum(const MetrizedGraph& g1, const VertexId& v1, const MetrizedGraph& g2,
                            const VertexId& v2) {
    g1.vertex_index(v1);
    g2.vertex_index(v2);
    std::vector<VertexId> vertices = g1.vertices();
    for (const auto& v : g2.vertices()) {
        if (v == v2) continue;
        if (g1.has_vertex(v)) throw Error(ErrorCode::DuplicateId, "vertex id \"" + v + "\" occurs in both summands");
        vertices.push_back(v);
    }
    auto rename = [&](const VertexId& v) { return v == v2 ? v1 : v; };
    std::vector<Edge> edges = g1.edges();
    for (const auto& e : g2.edges()) {
        if (g1.has_edge(e.id)) throw Error(ErrorCode::DuplicateId, "edge id \"" + e.id + "\" occurs in both summands");
        edges.push_back(Edge{e.id, rename(e.u), rename(e.v), e.length});
    }
    return MetrizedGraph(std::move(vertices), std::move(edges));
}

namespace {

/// Tarjan's biconnected components over edge ids; loops form their own blocks.
class BlockFinder {
public:
    explicit BlockFinder(const MetrizedGraph& g) : g_(g), disc_(g.vertex_count(), 0), low_(g.vertex_count(), 0) {
        adjacency_.resize(g.vertex_count());
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edges()[i];
            if (e.is_loop()) {
                blocks_.push_back({e.id});
                continue;
            }
            std::size_t a = g.vertex_index(e.u), b = g.vertex_index(e.v);
            adjacency_[a].push_back({b, i});
            adjacency_[b].push_back({a, i});
        }
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (disc_[v] == 0) visit(v, SIZE_MAX);
    }

    std::vector<std::set<EdgeId>> blocks() && { return std::move(blocks_); }
    const std::set<std::size_t>& articulation() const { return articulation_; }

private:
    void visit(std::size_t u, std::size_t parent_edge) {
        disc_[u] = low_[u] = ++timer_;
        int children = 0;
        for (auto [w, ei] : adjacency_[u]) {
            if (ei == parent_edge) continue;
            if (disc_[w] == 0) {
                ++children;
                stack_.push_back(ei);
                visit(w, ei);
                low_[u] = std::min(low_[u], low_[w]);
                if (low_[w] >= disc_[u]) {
                    if (parent_edge != SIZE_MAX || children > 1) articulation_.insert(u);
                    std::set<EdgeId> block;
                    while (true) {
                        std::size_t top = stack_.back();
                        stack_.pop_back();
                        block.insert(g_.edges()[top].id);
                        if (top == ei) break;
                    }
                    blocks_.push_back(std::move(block));
                }
            } else if (disc_[w] < disc_[u]) {
                stack_.push_back(ei);
                low_[u] = std::min(low_[u], disc_[w]);
            }
        }
        if (parent_edge == SIZE_MAX && children > 1) articulation_.insert(u);
    }

    const MetrizedGraph& g_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
    std::vector<int> disc_, low_;
    std::vector<std::size_t> stack_;
    std::vector<std::set<EdgeId>> blocks_;
    std::set<std::size_t> articulation_;
    int timer_ = 0;
};

}  // namespace

std::vector<MetrizedGraph> irreducible_decomposition(const MetrizedGraph& g) {
    if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "decomposition of a disconnected graph");
    auto blocks = BlockFinder(g).blocks();
    std::vector<MetrizedGraph> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back(edge_subgraph(g, b));
    auto key = [](const MetrizedGraph& h) {
        auto vmin = *std::min_element(h.vertices().begin(), h.vertices().end());
        return std::make_pair(vmin, *h.edge_ids().begin());
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
}

std::set<VertexId> cut_vertices(const MetrizedGraph& g) {
    BlockFinder finder(g);
    std::set<VertexId> out;
    for (auto i : finder.articulation()) out.insert(g.vertices()[i]);
    // a vertex carrying a loop plus anything else also separates
    for (const auto& e : g.edges())
        if (e.is_loop() && g.valence(e.u) > 2) out.insert(e.u);
    return out;
}

std::string fresh_id(const std::string& base, const std::set<std::string>& taken) {
    if (!taken.count(base)) return base;
    for (int k = 1;; ++k) {
        std::string candidate = base + "_" + std::to_string(k);
        if (!taken.count(candidate)) return candidate;
    }
}

Subdivision subdivide_edge(const MetrizedGraph& g, const EdgeId& id, const Rational& t) {
    const Edge& e = g.edge(id);
    if (t.sign() <= 0 || t >= e.length)
        throw Error(ErrorCode::OutOfRange, "subdivision point must lie strictly inside edge \"" + id + "\"");
    std::set<std::string> vtaken(g.vertices().begin(), g.vertices().end());
    std::set<std::string> etaken = g.edge_ids();
    Subdivision out;
    out.midpoint = fresh_id(id + "/m", vtaken);
    out.first = fresh_id(id + "/a", etaken);
    etaken.insert(out.first);
    out.second = fresh_id(id + "/b", etaken);

    std::vector<VertexId> vertices = g.vertices();
    vertices.push_back(out.midpoint);
    std::vector<Edge> edges;
    for (const auto& f : g.edges()) {
        if (f.id != id) {
            edges.push_back(f);
            continue;
        }
        edges.push_back(Edge{out.first, f.u, out.midpoint, t});
        edges.push_back(Edge{out.second, out.midpoint, f.v, f.length - t});
    }
    out.graph = MetrizedGraph(std::move(vertices), std::move(edges));
    return out;
}

MetrizedGraph delete_edges(const MetrizedGraph& g, const std::set<EdgeId>& removed) {
    for (const auto& id : removed) g.edge_index(id);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!removed.count(e.id)) edges.push_back(e);
    return MetrizedGraph(g.vertices(), std::move(edges));
}

MetrizedGraph edge_subgraph(const MetrizedGraph& g, const std::set<EdgeId>& ids) {
    std::set<VertexId> used;
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (!ids.count(e.id)) continue;
        used.insert(e.u);
        used.insert(e.v);
        edges.push_back(e);
    }
    std::vector<VertexId> vertices;
    for (const auto& v : g.vertices())
        if (used.count(v)) vertices.push_back(v);
    return MetrizedGraph(std::move(vertices), std::move(edges));
}

}  // namespace admgraph
