#include "admgraph/bogomolov.hpp"

#include <algorithm>
#include <numeric>

#include "admgraph/error.hpp"
#include "admgraph/graph_polynomials.hpp"
#include "admgraph/potential.hpp"

namespace admgraph {

int FiberConfiguration::genus_of(const VertexId& v) const {
    auto it = genus.find(v);
    return it == genus.end() ? 0 : it->second;
}

void validate_fiber(const FiberConfiguration& cfg) {
    if (cfg.g < 2) throw Error(ErrorCode::GenusOutOfRange, "fiber genus must be at least 2");
    if (!cfg.dual.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "dual graph must be connected");
    long total = cfg.dual.betti_number();
    for (const auto& [v, k] : cfg.genus) {
        cfg.dual.vertex_index(v);
        if (k < 0) throw Error(ErrorCode::InvalidConfiguration, "negative genus at component \"" + v + "\"");
        total += k;
    }
    for (const auto& e : cfg.dual.edges())
        if (e.length.sign() <= 0)
            throw Error(ErrorCode::NonpositiveLength, "nonpositive length on node \"" + e.id + "\"");
    if (total != cfg.g)
        throw Error(ErrorCode::InvalidConfiguration, "sum of genera plus Betti number is " + std::to_string(total) +
                                                         ", expected " + std::to_string(cfg.g));
    if (cfg.involution) {
        check_involution(cfg.dual, *cfg.involution, true);
        for (const auto& v : cfg.dual.vertices())
            if (cfg.genus_of(v) != cfg.genus_of(cfg.involution->vertex(v)))
                throw Error(ErrorCode::InvolutionMalformed, "involution does not preserve the genus of \"" + v + "\"");
    }
}

int arithmetic_genus(const FiberConfiguration& cfg, const std::set<VertexId>& vertices, const std::set<EdgeId>& removed) {
    std::map<VertexId, VertexId> parent;
    for (const auto& v : vertices) parent[v] = v;
    auto find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    long edges = 0;
    long components = static_cast<long>(vertices.size());
    for (const auto& e : cfg.dual.edges()) {
        if (removed.count(e.id) || !vertices.count(e.u) || !vertices.count(e.v)) continue;
        ++edges;
        VertexId a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[b] = a;
            --components;
        }
    }
    long total = edges - static_cast<long>(vertices.size()) + components;
    for (const auto& v : vertices) total += cfg.genus_of(v);
    return static_cast<int>(total);
}

NodeClass node_type(const FiberConfiguration& cfg, const EdgeId& node) {
    cfg.dual.edge_index(node);
    const auto sides = cfg.dual.components({node});
    if (sides.size() == 1) return NodeClass{0, std::nullopt};
    return NodeClass{std::min(arithmetic_genus(cfg, sides[0], {node}), arithmetic_genus(cfg, sides[1], {node})),
                     std::nullopt};
}

NodeClass node_subtype(const FiberConfiguration& cfg, const EdgeId& node) {
    if (!cfg.involution) throw Error(ErrorCode::MissingInvolution, "subtypes need the involution");
    if (node_type(cfg, node).type != 0)
        throw Error(ErrorCode::NotTypeZero, "node \"" + node + "\" is not of type zero");
    const EdgeId image = cfg.involution->edge(node);
    if (image == node) return NodeClass{0, 0};
    const std::set<EdgeId> removed{node, image};
    const auto pieces = cfg.dual.components(removed);
    if (pieces.size() != 2)
        throw Error(ErrorCode::UnexpectedComponentCount, "deleting nodes \"" + node + "\" and \"" + image + "\" leaves " +
                                                             std::to_string(pieces.size()) + " components");
    return NodeClass{0, std::min(arithmetic_genus(cfg, pieces[0], removed), arithmetic_genus(cfg, pieces[1], removed))};
}

InvariantCounts InvariantCounts::zero(int g) {
    InvariantCounts c;
    c.g = g;
    c.xi.assign(static_cast<std::size_t>(std::max(0, (g - 1) / 2 + 1)), 0);
    c.delta.assign(static_cast<std::size_t>(std::max(0, g / 2)), 0);
    return c;
}

long InvariantCounts::delta0() const {
    long total = xi.empty() ? 0 : xi[0];
    for (std::size_t j = 1; j < xi.size(); ++j) total += 2 * xi[j];
    return total;
}

bool InvariantCounts::all_zero() const {
    return std::all_of(xi.begin(), xi.end(), [](long x) { return x == 0; }) &&
           std::all_of(delta.begin(), delta.end(), [](long x) { return x == 0; });
}

InvariantCounts count_invariants(const FiberConfiguration& cfg) {
    validate_fiber(cfg);
    InvariantCounts out = InvariantCounts::zero(cfg.g);
    for (const auto& e : cfg.dual.edges()) {
        const NodeClass t = node_type(cfg, e.id);
        if (t.type > 0) {
            ++out.delta.at(static_cast<std::size_t>(t.type - 1));
            continue;
        }
        const NodeClass s = node_subtype(cfg, e.id);
        const EdgeId image = cfg.involution->edge(e.id);
        if (image == e.id || *s.subtype == 0) {
            ++out.xi.at(0);  // xi0 counts nodes
        } else if (e.id < image) {
            ++out.xi.at(static_cast<std::size_t>(*s.subtype));  // one per pair
        }
    }
    return out;
}

namespace {

void require_shape(const InvariantCounts& c, int min_genus, bool for_r0 = false) {
    if (c.g < min_genus) {
        if (for_r0)
            throw Error(ErrorCode::GenusBelowThree,
                        "the bound is stated for g >= 3; genus 2 is covered by an earlier result and is not computed");
        throw Error(ErrorCode::GenusOutOfRange, "genus must be at least " + std::to_string(min_genus));
    }
    const InvariantCounts z = InvariantCounts::zero(c.g);
    if (c.xi.size() != z.xi.size() || c.delta.size() != z.delta.size())
        throw Error(ErrorCode::GenusOutOfRange, "count vectors do not match genus " + std::to_string(c.g));
    for (long x : c.xi)
        if (x < 0) throw Error(ErrorCode::InvalidConfiguration, "negative count");
    for (long x : c.delta)
        if (x < 0) throw Error(ErrorCode::InvalidConfiguration, "negative count");
}

Rational omega_xi(int g, int j) {
    if (j == 0) return Rational(g - 1, 2 * g + 1);
    return Rational(6 * j * (g - 1 - j) + 2 * (g - 1), 2 * g + 1);
}

Rational omega_delta(int g, int i) { return Rational(12 * i * (g - i), 2 * g + 1) - Rational(1); }

Rational epsilon_xi(int g, int j) {
    if (j == 0) return Rational(5 * (g - 1), 12 * g);
    const Rational first = g >= 5 ? Rational(4 * (g - 1), 3 * g) : Rational(g - 1, g);
    return first + Rational(2 * j * (g - 1 - j), g);
}

Rational epsilon_delta(int g, int i) { return Rational(4 * i * (g - 1), g) - Rational(1); }

Rational r0_xi(int g, int j) {
    if (j == 0) return Rational(2 * g - 5, 12);
    if (g <= 4) return Rational(2 * j * (g - 1 - j) - 1);
    return Rational(2 * (3 * j * (g - 1 - j) - g - 2), 3);
}

}  // namespace

Rational omega_self_intersection(const InvariantCounts& counts) {
    require_shape(counts, 2);
    const int g = counts.g;
    Rational total;
    for (std::size_t j = 0; j < counts.xi.size(); ++j) total += omega_xi(g, static_cast<int>(j)) * Rational(counts.xi[j]);
    for (std::size_t i = 0; i < counts.delta.size(); ++i)
        total += omega_delta(g, static_cast<int>(i + 1)) * Rational(counts.delta[i]);
    return total;
}

Rational epsilon_fiber_upper(const InvariantCounts& counts) {
    require_shape(counts, 3);
    const int g = counts.g;
    Rational total;
    for (std::size_t j = 0; j < counts.xi.size(); ++j) total += epsilon_xi(g, static_cast<int>(j)) * Rational(counts.xi[j]);
    for (std::size_t i = 0; i < counts.delta.size(); ++i)
        total += epsilon_delta(g, static_cast<int>(i + 1)) * Rational(counts.delta[i]);
    return total;
}

Rational r0_bound(const InvariantCounts& counts) {
    require_shape(counts, 3, true);
    const int g = counts.g;
    Rational bracket;
    for (std::size_t j = 0; j < counts.xi.size(); ++j) bracket += r0_xi(g, static_cast<int>(j)) * Rational(counts.xi[j]);
    for (std::size_t i = 0; i < counts.delta.size(); ++i) {
        const long k = static_cast<long>(i + 1);
        bracket += Rational(4 * k * (g - k)) * Rational(counts.delta[i]);
    }
    return Rational((g - 1) * (g - 1), g * (2 * g + 1)) * bracket;
}

RadicandReport pairing_radicand(const InvariantCounts& counts) {
    require_shape(counts, 3, true);
    const int g = counts.g;
    RadicandReport out;
    auto add = [&](std::string name, long count, Rational om, Rational ep) {
        const Rational contribution = Rational(g - 1) * (om - ep) * Rational(count);
        out.terms.push_back(BoundTerm{std::move(name), count, om, ep, contribution});
    };
    for (std::size_t j = 0; j < counts.xi.size(); ++j)
        add("xi" + std::to_string(j), counts.xi[j], omega_xi(g, static_cast<int>(j)), epsilon_xi(g, static_cast<int>(j)));
    for (std::size_t i = 0; i < counts.delta.size(); ++i)
        add("delta" + std::to_string(i + 1), counts.delta[i], omega_delta(g, static_cast<int>(i + 1)),
            epsilon_delta(g, static_cast<int>(i + 1)));
    out.omega = omega_self_intersection(counts);
    out.epsilon_upper = epsilon_fiber_upper(counts);
    out.radicand = Rational(g - 1) * (out.omega - out.epsilon_upper);
    if (counts.all_zero()) out.warnings.push_back("no singular-fiber data: all counts are zero");
    return out;
}

Divisor canonical_polarization(const FiberConfiguration& cfg) {
    Divisor d;
    for (const auto& v : cfg.dual.vertices()) d.set(v, Rational(2 * cfg.genus_of(v) - 2 + cfg.dual.valence(v)));
    return d;
}

FiberEpsilon fiber_epsilon(const FiberConfiguration& cfg) {
    validate_fiber(cfg);
    const Divisor omega = canonical_polarization(cfg);
    FiberEpsilon out;

    MetrizedGraph direct = cfg.dual;
    for (const auto& e : cfg.dual.edges())
        if (e.is_loop()) direct = subdivide_edge(direct, e.id, e.length / Rational(2)).graph;
    out.direct = epsilon_numeric(direct, omega).epsilon;

    std::set<EdgeId> positive, zero;
    for (const auto& e : cfg.dual.edges()) (node_type(cfg, e.id).type > 0 ? positive : zero).insert(e.id);

    GraphMap g1 = contract(cfg.dual, positive);
    Involution moved;
    if (!zero.empty()) {
        if (!cfg.involution) throw Error(ErrorCode::MissingInvolution, "type-zero nodes need the involution");
        for (const auto& [v, image] : g1.vertex_map) {
            const VertexId target = g1.vertex_map.at(cfg.involution->vertex(v));
            if (target != image) moved.vertex_map[image] = target;
        }
        for (const auto& e : g1.graph.edges()) {
            const EdgeId image = cfg.involution->edge(e.id);
            if (image != e.id) moved.edge_map[e.id] = image;
        }
    }
    NormalizedFiber nf = normalize_fiber(g1.graph, moved);
    out.hyperelliptic_part = epsilon_closed_form(nf.graph, normalize_divisor(nf, push_divisor(omega, g1.vertex_map)));

    GraphMap g2 = contract(cfg.dual, zero);
    out.tree_part = epsilon_numeric(g2.graph, push_divisor(omega, g2.vertex_map)).epsilon;
    return out;
}

}  // namespace admgraph
