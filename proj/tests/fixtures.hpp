#pragma once

#include "admgraph/graph.hpp"

namespace admgraph::fixtures {

/// Two vertices P, Q joined by parallel edges e1, e2.
inline MetrizedGraph sg(const Rational& l = Rational(1)) {
    return MetrizedGraph({"P", "Q"}, {{"e1", "P", "Q", l}, {"e2", "P", "Q", l}});
}

/// P -a- Q -b- R -c- P, unit lengths.
inline MetrizedGraph triangle() {
    return MetrizedGraph({"P", "Q", "R"}, {{"a", "P", "Q"}, {"b", "Q", "R"}, {"c", "R", "P"}});
}

inline MetrizedGraph unit_edge(const Rational& l = Rational(1)) { return MetrizedGraph({"P", "Q"}, {{"e", "P", "Q", l}}); }

/// Appends a suffix to every vertex and edge id.
inline MetrizedGraph renamed(const MetrizedGraph& g, const std::string& suffix) {
    std::vector<VertexId> vs;
    for (const auto& v : g.vertices()) vs.push_back(v + suffix);
    std::vector<Edge> es;
    for (const auto& e : g.edges()) es.push_back(Edge{e.id + suffix, e.u + suffix, e.v + suffix, e.length});
    return MetrizedGraph(vs, es);
}

inline Divisor div(std::initializer_list<std::pair<const VertexId, Rational>> items) {
    return Divisor(std::map<VertexId, Rational>(items));
}

}  // namespace admgraph::fixtures
