#include "admgraph/hyperelliptic.hpp"

#include <algorithm>

#include "admgraph/error.hpp"

namespace admgraph {

VertexId Involution::vertex(const VertexId& v) const {
    auto it = vertex_map.find(v);
    return it == vertex_map.end() ? v : it->second;
}

EdgeId Involution::edge(const EdgeId& e) const {
    auto it = edge_map.find(e);
    return it == edge_map.end() ? e : it->second;
}

void check_involution(const MetrizedGraph& g, const Involution& i, bool allow_fixed_edges) {
    auto bad = [](const std::string& what) { throw Error(ErrorCode::InvolutionMalformed, what); };
    for (const auto& [a, b] : i.vertex_map)
        if (!g.has_vertex(a) || !g.has_vertex(b)) bad("involution maps unknown vertex \"" + a + "\"");
    for (const auto& [a, b] : i.edge_map)
        if (!g.has_edge(a) || !g.has_edge(b)) bad("involution maps unknown edge \"" + a + "\"");
    for (const auto& v : g.vertices())
        if (i.vertex(i.vertex(v)) != v) bad("involution is not of order two at vertex \"" + v + "\"");
    for (const auto& e : g.edges()) {
        const EdgeId image = i.edge(e.id);
        if (i.edge(image) != e.id) bad("involution is not of order two at edge \"" + e.id + "\"");
        if (!allow_fixed_edges && image == e.id) bad("edge \"" + e.id + "\" is fixed");
        const Edge& f = g.edge(image);
        const VertexId a = i.vertex(e.u), b = i.vertex(e.v);
        if (!((a == f.u && b == f.v) || (a == f.v && b == f.u)))
            bad("involution does not respect the ends of edge \"" + e.id + "\"");
        if (f.length != e.length) bad("involution does not preserve the length of edge \"" + e.id + "\"");
    }
}

std::string_view edge_kind_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Disjoint: return "disjoint";
        case EdgeKind::OneJointed: return "one-jointed";
        case EdgeKind::TwoJointed: return "two-jointed";
    }
    return "unknown";
}

std::set<VertexId> HyperellipticGraph::non_fixed_vertices() const {
    std::set<VertexId> out;
    for (const auto& v : graph_.vertices())
        if (!is_fixed(v)) out.insert(v);
    return out;
}

VertexId HyperellipticGraph::vertex_class(const VertexId& v) const {
    graph_.vertex_index(v);
    return std::min(v, involution_.vertex(v));
}

const EdgeClass& HyperellipticGraph::edge_class(const std::string& class_id) const {
    auto it = class_index_.find(class_id);
    if (it == class_index_.end()) throw Error(ErrorCode::UnknownEdge, "unknown edge class \"" + class_id + "\"");
    return classes_[it->second];
}

const std::string& HyperellipticGraph::class_of(const EdgeId& e) const {
    auto it = class_of_.find(e);
    if (it == class_of_.end()) throw Error(ErrorCode::UnknownEdge, "unknown edge \"" + e + "\"");
    return it->second;
}

std::set<std::string> HyperellipticGraph::class_ids() const {
    std::set<std::string> out;
    for (const auto& c : classes_) out.insert(c.id);
    return out;
}

std::map<std::string, Rational> HyperellipticGraph::class_lengths() const {
    std::map<std::string, Rational> out;
    for (const auto& c : classes_) out[c.id] = c.length;
    return out;
}

HyperellipticGraph validate_hyperelliptic(const MetrizedGraph& g, const Involution& i) {
    check_involution(g, i, true);
    if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "hyperelliptic graph must be connected");
    for (const auto& e : g.edges()) {
        if (e.is_loop()) throw AxiomViolation(1, "edge \"" + e.id + "\" is a loop");
        if (e.length.sign() <= 0)
            throw Error(ErrorCode::NonpositiveLength, "nonpositive length on edge \"" + e.id + "\"");
    }
    for (const auto& e : g.edges())
        if (i.edge(e.id) == e.id) throw AxiomViolation(2, "edge \"" + e.id + "\" is fixed by the involution");

    HyperellipticGraph h;
    h.graph_ = g;
    h.involution_ = i;
    for (const auto& v : g.vertices())
        if (i.vertex(v) == v) h.fixed_.insert(v);
    for (const auto& v : g.vertices())
        if (!h.is_fixed(v) && g.valence(v) < 3)
            throw AxiomViolation(3, "non-fixed vertex \"" + v + "\" has fewer than three edges");

    for (const auto& e : g.edges()) {
        const EdgeId image = i.edge(e.id);
        if (image < e.id) continue;
        const Edge& f = g.edge(image);
        std::set<VertexId> ends{e.u, e.v};
        int shared = static_cast<int>(ends.count(f.u) + (f.v != f.u ? ends.count(f.v) : 0));
        EdgeKind kind = shared == 0 ? EdgeKind::Disjoint : shared == 1 ? EdgeKind::OneJointed : EdgeKind::TwoJointed;
        h.class_index_[e.id] = h.classes_.size();
        h.classes_.push_back(EdgeClass{e.id, {e.id, image}, kind, e.length});
        h.class_of_[e.id] = e.id;
        h.class_of_[image] = e.id;
    }

    std::vector<VertexId> qverts;
    for (const auto& v : g.vertices())
        if (h.vertex_class(v) == v) qverts.push_back(v);
    std::vector<Edge> qedges;
    for (const auto& c : h.classes_) {
        const Edge& e = g.edge(c.id);
        Edge q{c.id, h.vertex_class(e.u), h.vertex_class(e.v), c.length};
        if (q.is_loop()) throw AxiomViolation(4, "class \"" + c.id + "\" is a loop in the quotient");
        qedges.push_back(std::move(q));
    }
    h.quotient_ = MetrizedGraph(std::move(qverts), std::move(qedges));
    if (h.quotient_.edge_count() + 1 != h.quotient_.vertex_count())
        throw AxiomViolation(4, "the quotient graph has a cycle");
    return h;
}

std::map<EdgeId, EdgeKind> classify_edges(const HyperellipticGraph& h) {
    std::map<EdgeId, EdgeKind> out;
    for (const auto& c : h.classes())
        for (const auto& e : c.members) out[e] = c.kind;
    return out;
}

std::vector<HyperellipticGraph> irreducible_components(const HyperellipticGraph& h) {
    std::vector<HyperellipticGraph> out;
    for (const auto& part : irreducible_decomposition(h.graph())) {
        Involution sub;
        for (const auto& v : part.vertices()) {
            const VertexId image = h.involution().vertex(v);
            if (!part.has_vertex(image))
                throw Error(ErrorCode::PropertyViolation, "irreducible component is not stable under the involution");
            if (image != v) sub.vertex_map[v] = image;
        }
        for (const auto& e : part.edges()) {
            const EdgeId image = h.involution().edge(e.id);
            if (!part.has_edge(image))
                throw Error(ErrorCode::PropertyViolation, "irreducible component is not stable under the involution");
            sub.edge_map[e.id] = image;
        }
        out.push_back(validate_hyperelliptic(part, sub));
    }
    return out;
}

namespace {

bool component_is_simple(const HyperellipticGraph& c) {
    return c.graph().edge_count() == 2 && c.classes().size() == 1 && c.classes().front().kind == EdgeKind::TwoJointed;
}

int component_size(const HyperellipticGraph& c) {
    if (component_is_simple(c)) return 1;
    int one_jointed = 0;
    for (const auto& cls : c.classes())
        if (cls.kind == EdgeKind::OneJointed) ++one_jointed;
    return one_jointed - 1;
}

}  // namespace

bool is_simple(const HyperellipticGraph& h) { return component_is_simple(h); }

bool is_semisimple(const HyperellipticGraph& h) {
    for (const auto& c : irreducible_components(h))
        if (!component_is_simple(c)) return false;
    return true;
}

int graph_size(const HyperellipticGraph& h) {
    int total = 0;
    for (const auto& c : irreducible_components(h)) total += component_size(c);
    return total;
}

NuCounts nu_counts(const HyperellipticGraph& h, const VertexId& v) {
    h.graph().vertex_index(v);
    if (h.is_fixed(v)) throw Error(ErrorCode::FixedVertex, "vertex \"" + v + "\" is fixed by the involution");
    NuCounts out;
    for (const auto& e : h.graph().incident_edges(v)) {
        switch (h.kind(e)) {
            case EdgeKind::Disjoint: ++out.nu0; break;
            case EdgeKind::OneJointed: ++out.nu1; break;
            case EdgeKind::TwoJointed: break;
        }
    }
    out.nu = out.nu0 + out.nu1;
    return out;
}

HyperellipticMap contract_classes(const HyperellipticGraph& h, const std::set<std::string>& classes) {
    std::set<EdgeId> edges;
    for (const auto& id : classes)
        for (const auto& e : h.edge_class(id).members) edges.insert(e);
    GraphMap contracted = contract(h.graph(), edges);

    Involution moved;
    for (const auto& [v, image] : contracted.vertex_map) {
        const VertexId target = contracted.vertex_map.at(h.involution().vertex(v));
        if (target != image) moved.vertex_map[image] = target;
    }
    for (const auto& e : contracted.graph.edges()) moved.edge_map[e.id] = h.involution().edge(e.id);
    return HyperellipticMap{validate_hyperelliptic(contracted.graph, moved), std::move(contracted.vertex_map)};
}

HyperellipticMap restrict_classes(const HyperellipticGraph& h, const std::set<std::string>& classes) {
    std::set<std::string> complement;
    for (const auto& c : h.classes()) {
        if (!classes.count(c.id)) complement.insert(c.id);
    }
    for (const auto& id : classes) h.edge_class(id);
    return contract_classes(h, complement);
}

bool is_invariant(const HyperellipticGraph& h, const Divisor& d) {
    for (const auto& [v, a] : d.coefficients())
        if (d.coefficient(h.involution().vertex(v)) != a) return false;
    return true;
}

Rational w_weight(const HyperellipticGraph& h, const Divisor& d, const std::string& class_id) {
    d.check_support(h.graph());
    if (!is_invariant(h, d)) throw Error(ErrorCode::PolarizationShape, "divisor is not invariant under the involution");
    HyperellipticMap r = restrict_classes(h, {class_id});
    if (!is_simple(r.graph))
        throw Error(ErrorCode::NotSimpleRestriction, "restriction to class \"" + class_id + "\" is not simple");
    Divisor pushed = push_divisor(d, r.vertex_map);
    const auto& vs = r.graph.graph().vertices();
    return min(pushed.coefficient(vs[0]), pushed.coefficient(vs[1]));
}

NormalizedFiber normalize_fiber(const MetrizedGraph& dual, const Involution& inv) {
    check_involution(dual, inv, true);
    auto reject = [](const std::string& what) { throw Error(ErrorCode::NotHyperellipticConfiguration, what); };

    std::vector<VertexId> vertices = dual.vertices();
    std::set<VertexId> vtaken(vertices.begin(), vertices.end());
    std::set<EdgeId> etaken = dual.edge_ids();
    std::vector<Edge> edges;
    Involution i;
    for (const auto& [a, b] : inv.vertex_map)
        if (a != b) i.vertex_map[a] = b;

    NormalizedFiber out{validate_hyperelliptic(MetrizedGraph::one_point("_"), {}), {}, {}};

    // midpoints of edges fixed by the involution
    for (const auto& e : dual.edges()) {
        if (inv.edge(e.id) != e.id) {
            edges.push_back(e);
            i.edge_map[e.id] = inv.edge(e.id);
            continue;
        }
        if (e.is_loop()) {
            if (inv.vertex(e.u) != e.u) reject("loop \"" + e.id + "\" fixed by the involution sits on a non-fixed vertex");
        } else if (inv.vertex(e.u) != e.v) {
            reject("edge \"" + e.id + "\" is fixed but its ends are not exchanged");
        }
        const VertexId mid = fresh_id(e.id + "/m", vtaken);
        vtaken.insert(mid);
        vertices.push_back(mid);
        out.inserted_vertices.insert(mid);
        const EdgeId a = fresh_id(e.id + "/a", etaken);
        etaken.insert(a);
        const EdgeId b = fresh_id(e.id + "/b", etaken);
        etaken.insert(b);
        const Rational half = e.length / Rational(2);
        edges.push_back(Edge{a, e.u, mid, half});
        edges.push_back(Edge{b, e.v, mid, half});
        i.edge_map[a] = b;
        i.edge_map[b] = a;
    }

    // smooth non-fixed vertices with exactly two edge-ends, one orbit at a time
    while (true) {
        MetrizedGraph current(vertices, edges);
        VertexId target;
        for (const auto& v : current.vertices()) {
            if (i.vertex(v) != v && current.valence(v) == 2) {
                target = v;
                break;
            }
        }
        if (target.empty()) break;

        const VertexId partner = i.vertex(target);
        std::map<EdgeId, Edge> merged;  // new edge per removed vertex
        std::map<VertexId, EdgeId> merged_id;
        std::set<EdgeId> consumed;
        for (const VertexId& v : {target, partner}) {
            auto inc = current.incident_edges(v);
            if (inc.size() != 2) reject("vertex \"" + v + "\" carries a loop");
            const Edge& e1 = current.edge(std::min(inc[0], inc[1]));
            const Edge& e2 = current.edge(std::max(inc[0], inc[1]));
            const VertexId a = e1.other(v), b = e2.other(v);
            if (a == partner || b == partner || a == v || b == v)
                reject("vertex \"" + v + "\" is joined to its own image");
            const EdgeId id = fresh_id(e1.id + "+" + e2.id, etaken);
            etaken.insert(id);
            merged[id] = Edge{id, a, b, e1.length + e2.length};
            merged_id[v] = id;
            consumed.insert(e1.id);
            consumed.insert(e2.id);
        }
        std::vector<Edge> next;
        for (const auto& e : edges)
            if (!consumed.count(e.id)) next.push_back(e);
        for (auto& [id, e] : merged) next.push_back(e);
        for (const auto& id : consumed) i.edge_map.erase(id);
        i.edge_map[merged_id[target]] = merged_id[partner];
        i.edge_map[merged_id[partner]] = merged_id[target];
        i.vertex_map.erase(target);
        i.vertex_map.erase(partner);
        std::erase(vertices, target);
        std::erase(vertices, partner);
        out.removed_vertices.insert(target);
        out.removed_vertices.insert(partner);
        edges = std::move(next);
    }

    try {
        out.graph = validate_hyperelliptic(MetrizedGraph(vertices, edges), i);
    } catch (const Error& err) {
        reject(std::string("normalized fiber is not hyperelliptic: ") + err.what());
    }
    return out;
}

Divisor normalize_divisor(const NormalizedFiber& fiber, const Divisor& d) {
    Divisor out;
    for (const auto& [v, a] : d.coefficients()) {
        if (fiber.removed_vertices.count(v))
            throw Error(ErrorCode::PolarizationShape, "smoothed vertex \"" + v + "\" carries a nonzero coefficient");
        out.set(v, a);
    }
    out.check_support(fiber.graph.graph());
    return out;
}

}  // namespace admgraph
