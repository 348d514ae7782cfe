#include "admgraph/testkit.hpp"

#include <algorithm>

#include "admgraph/error.hpp"

namespace admgraph {

namespace {

const std::vector<Rational>& length_choices() {
    static const std::vector<Rational> choices{Rational(1, 3), Rational(1, 2), Rational(1),
                                               Rational(3, 2), Rational(2),    Rational(3)};
    return choices;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
    std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
    return items[d(rng)];
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, int numerator = 1, int denominator = 2) {
    return uniform(rng, 0, denominator - 1) < numerator;
}

/// Random labelled tree on n vertices; vertices of degree >= 3 are non-fixed with probability 1/2.
CoverSpec random_spec(std::mt19937_64& rng, int n, bool unit_lengths) {
    CoverSpec spec;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int k = 1; k < n; ++k) {
        const int parent = uniform(rng, 0, k - 1);
        const Rational length = unit_lengths ? Rational(1) : pick(rng, length_choices());
        spec.edges.push_back(CoverSpec::TreeEdge{parent, k, length, coin(rng)});
        ++degree[static_cast<std::size_t>(parent)];
        ++degree[static_cast<std::size_t>(k)];
    }
    spec.fixed.assign(static_cast<std::size_t>(n), true);
    for (int k = 0; k < n; ++k)
        if (degree[static_cast<std::size_t>(k)] >= 3 && coin(rng)) spec.fixed[static_cast<std::size_t>(k)] = false;
    return spec;
}

std::string vname(int k) { return "v" + std::to_string(k); }
std::string image_name(const std::string& s) { return s + "'"; }

struct CoverParts {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    Involution involution;
};

CoverParts cover_parts(const CoverSpec& spec) {
    CoverParts out;
    const int n = static_cast<int>(spec.fixed.size());
    for (int k = 0; k < n; ++k) {
        out.vertices.push_back(vname(k));
        if (!spec.fixed[static_cast<std::size_t>(k)]) {
            out.vertices.push_back(image_name(vname(k)));
            out.involution.vertex_map[vname(k)] = image_name(vname(k));
            out.involution.vertex_map[image_name(vname(k))] = vname(k);
        }
    }
    auto up = [&](int k, bool image) {
        if (spec.fixed.at(static_cast<std::size_t>(k)) || !image) return vname(k);
        return image_name(vname(k));
    };
    for (std::size_t k = 0; k < spec.edges.size(); ++k) {
        const auto& t = spec.edges[k];
        const EdgeId e = "e" + std::to_string(k), f = image_name(e);
        const bool flip = t.crossed && !spec.fixed.at(static_cast<std::size_t>(t.a)) &&
                          !spec.fixed.at(static_cast<std::size_t>(t.b));
        out.edges.push_back(Edge{e, up(t.a, false), up(t.b, flip), t.length});
        out.edges.push_back(Edge{f, up(t.a, true), up(t.b, !flip), t.length});
        out.involution.edge_map[e] = f;
        out.involution.edge_map[f] = e;
    }
    return out;
}

}  // namespace

HyperellipticGraph build_cover(const CoverSpec& spec) {
    CoverParts parts = cover_parts(spec);
    return validate_hyperelliptic(MetrizedGraph(std::move(parts.vertices), std::move(parts.edges)), parts.involution);
}

HyperellipticGraph random_hyperelliptic(std::uint64_t seed, const SizeBounds& bounds) {
    if (bounds.min_size > bounds.max_size || bounds.max_size < 1 || bounds.max_tree_vertices < 2)
        throw Error(ErrorCode::InfeasibleBounds, "size bounds cannot be met");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        const int n = uniform(rng, 2, bounds.max_tree_vertices);
        HyperellipticGraph h = build_cover(random_spec(rng, n, false));
        const int sz = graph_size(h);
        if (sz >= bounds.min_size && sz <= bounds.max_size) return h;
    }
    throw Error(ErrorCode::InfeasibleBounds, "no cover within the size bounds after 2000 draws");
}

HyperellipticGraph random_irreducible(std::uint64_t seed, int size) {
    if (size < 2) throw Error(ErrorCode::InfeasibleBounds, "irreducible non-simple graphs have size at least 2");
    std::mt19937_64 rng(seed);
    // start from a non-fixed center with three leaves; each step adds one leaf
    std::vector<std::vector<int>> adj{{1, 2, 3}, {0}, {0}, {0}};
    while (true) {
        std::vector<int> leaves, inner;
        for (int k = 0; k < static_cast<int>(adj.size()); ++k) (adj[k].size() == 1 ? leaves : inner).push_back(k);
        if (static_cast<int>(leaves.size()) >= size + 1) break;
        const int fresh = static_cast<int>(adj.size());
        if (coin(rng)) {
            const int v = pick(rng, inner);
            adj.push_back({v});
            adj[v].push_back(fresh);
        } else {
            // the leaf becomes inner with two new leaves
            const int v = pick(rng, leaves);
            adj.push_back({v});
            adj.push_back({v});
            adj[v].push_back(fresh);
            adj[v].push_back(fresh + 1);
        }
    }
    CoverSpec spec;
    for (const auto& a : adj) spec.fixed.push_back(a.size() == 1);
    for (int k = 0; k < static_cast<int>(adj.size()); ++k)
        for (int j : adj[k])
            if (k < j) spec.edges.push_back(CoverSpec::TreeEdge{k, j, pick(rng, length_choices()), coin(rng)});
    return build_cover(spec);
}

Divisor random_polarization(const HyperellipticGraph& h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<long> choices{-1, 0, 1, 2, 3};
    while (true) {
        Divisor d;
        for (const auto& v : h.graph().vertices()) {
            if (h.is_fixed(v))
                d.set(v, Rational(pick(rng, choices)));
            else
                d.set(v, Rational(h.graph().valence(v) - 2));
        }
        if (d.degree() != Rational(-2)) return d;
    }
}

std::map<std::string, Rational> random_class_lengths(const HyperellipticGraph& h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::map<std::string, Rational> out;
    for (const auto& c : h.classes()) out[c.id] = pick(rng, length_choices());
    return out;
}

HyperellipticGraph make_simple_graph(const Rational& length) {
    Involution i;
    i.edge_map = {{"e", "e'"}, {"e'", "e"}};
    return validate_hyperelliptic(MetrizedGraph({"P", "Q"}, {{"e", "P", "Q", length}, {"e'", "P", "Q", length}}), i);
}

HyperellipticGraph make_elementary_graph(int n, const Rational& length) {
    if (n < 2) throw Error(ErrorCode::OutOfRange, "elementary graphs have size at least 2");
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    Involution i;
    for (int k = 1; k <= n + 1; ++k) vertices.push_back("P" + std::to_string(k));
    vertices.push_back("Q");
    vertices.push_back("Q'");
    i.vertex_map = {{"Q", "Q'"}, {"Q'", "Q"}};
    for (int k = 1; k <= n + 1; ++k) {
        const std::string e = "e" + std::to_string(k), p = "P" + std::to_string(k);
        edges.push_back(Edge{e, "Q", p, length});
        edges.push_back(Edge{e + "'", "Q'", p, length});
        i.edge_map[e] = e + "'";
        i.edge_map[e + "'"] = e;
    }
    return validate_hyperelliptic(MetrizedGraph(std::move(vertices), std::move(edges)), i);
}

HyperellipticGraph make_ladder_graph(int n) {
    if (n < 2) throw Error(ErrorCode::OutOfRange, "ladder needs at least two rungs");
    std::vector<VertexId> vertices{"O"};
    std::vector<Edge> edges;
    Involution i;
    auto pair = [&](const std::string& e, const VertexId& a, const VertexId& b, const VertexId& ia, const VertexId& ib) {
        edges.push_back(Edge{e, a, b, Rational(1)});
        edges.push_back(Edge{e + "'", ia, ib, Rational(1)});
        i.edge_map[e] = e + "'";
        i.edge_map[e + "'"] = e;
    };
    for (int k = 1; k <= n + 1; ++k) vertices.push_back("Q" + std::to_string(k));
    for (int k = 1; k <= n; ++k) {
        const std::string p = "P" + std::to_string(k);
        vertices.push_back(p);
        vertices.push_back(p + "'");
        i.vertex_map[p] = p + "'";
        i.vertex_map[p + "'"] = p;
    }
    pair("e0", "O", "P1", "O", "P1'");
    for (int k = 1; k < n; ++k) {
        const std::string a = "P" + std::to_string(k), b = "P" + std::to_string(k + 1);
        pair("e" + std::to_string(k), a, b, a + "'", b + "'");
    }
    for (int k = 1; k <= n; ++k) {
        const std::string q = "Q" + std::to_string(k), p = "P" + std::to_string(k);
        pair("f" + std::to_string(k), q, p, q, p + "'");
    }
    const std::string q = "Q" + std::to_string(n + 1), p = "P" + std::to_string(n);
    pair("f" + std::to_string(n + 1), q, p, q, p + "'");
    return validate_hyperelliptic(MetrizedGraph(std::move(vertices), std::move(edges)), i);
}

Divisor closed_form_polarization(const HyperellipticGraph& h, const Rational& fixed_coefficient) {
    Divisor d;
    for (const auto& v : h.graph().vertices())
        d.set(v, h.is_fixed(v) ? fixed_coefficient : Rational(h.graph().valence(v) - 2));
    return d;
}

FiberConfiguration random_fiber(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = uniform(rng, 2, 6);
    const CoverSpec spec = random_spec(rng, n, true);
    CoverParts parts = cover_parts(spec);

    std::map<VertexId, int> genus;
    for (int k = 0; k < n; ++k)
        if (spec.fixed[static_cast<std::size_t>(k)]) genus[vname(k)] = pick(rng, std::vector<int>{0, 0, 1, 2});

    // Collapse some genus-0 fixed leaves: a swapped pair to a fixed neighbour becomes an
    // involution-fixed loop there, a pair to a non-fixed neighbour becomes a fixed edge b - b'.
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (const auto& t : spec.edges) {
        ++degree[static_cast<std::size_t>(t.a)];
        ++degree[static_cast<std::size_t>(t.b)];
    }
    std::set<VertexId> dropped;
    int fixed_left = static_cast<int>(std::count(spec.fixed.begin(), spec.fixed.end(), true));
    for (std::size_t k = 0; k < spec.edges.size(); ++k) {
        const auto& t = spec.edges[k];
        const int leaf = degree[static_cast<std::size_t>(t.b)] == 1 ? t.b : t.a;
        const int other = leaf == t.b ? t.a : t.b;
        if (degree[static_cast<std::size_t>(leaf)] != 1 || !spec.fixed[static_cast<std::size_t>(leaf)]) continue;
        if (genus[vname(leaf)] != 0 || dropped.count(vname(other)) || !coin(rng, 1, 3)) continue;
        if (fixed_left <= 1) continue;
        const EdgeId e = "e" + std::to_string(k), f = image_name(e);
        const VertexId b = vname(other);
        const VertexId ib = spec.fixed[static_cast<std::size_t>(other)] ? b : image_name(b);
        std::erase_if(parts.edges, [&](const Edge& x) { return x.id == e || x.id == f; });
        parts.edges.push_back(Edge{e, b, ib, Rational(1)});
        parts.involution.edge_map.erase(e);
        parts.involution.edge_map.erase(f);
        dropped.insert(vname(leaf));
        --fixed_left;
        genus.erase(vname(leaf));
    }
    std::erase_if(parts.vertices, [&](const VertexId& v) { return dropped.count(v) != 0; });

    // Positive-type tails hanging from fixed components.
    std::vector<VertexId> anchors;
    for (const auto& v : parts.vertices)
        if (parts.involution.vertex(v) == v) anchors.push_back(v);
    int tails = 0;
    for (const auto& a : anchors) {
        VertexId at = a;
        while (coin(rng, 1, 4 + 2 * tails)) {
            const VertexId t = "t" + std::to_string(tails);
            parts.vertices.push_back(t);
            parts.edges.push_back(Edge{"b" + std::to_string(tails), at, t, Rational(1)});
            genus[t] = uniform(rng, 1, 2);
            at = t;
            ++tails;
        }
    }

    FiberConfiguration cfg;
    cfg.dual = MetrizedGraph(parts.vertices, parts.edges);
    cfg.involution = parts.involution;
    long total = cfg.dual.betti_number();
    for (const auto& [v, k] : genus) total += k;
    if (total < 3) {
        genus[anchors.front()] += static_cast<int>(3 - total);
        total = 3;
    }
    for (const auto& [v, k] : genus)
        if (k != 0) cfg.genus[v] = k;
    cfg.g = static_cast<int>(total);
    validate_fiber(cfg);
    return cfg;
}

}  // namespace admgraph
