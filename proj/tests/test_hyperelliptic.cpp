#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "admgraph/error.hpp"
#include "admgraph/hyperelliptic.hpp"
#include "admgraph/potential.hpp"
#include "admgraph/testkit.hpp"
#include "fixtures.hpp"

using namespace admgraph;
using namespace admgraph::fixtures;

namespace {

int axiom_clause(const MetrizedGraph& g, const Involution& i) {
    try {
        validate_hyperelliptic(g, i);
    } catch (const AxiomViolation& e) {
        return e.clause();
    }
    return 0;
}

}  // namespace

TEST_CASE("simple and elementary graphs validate") {
    auto s = make_simple_graph();
    CHECK(s.classes().size() == 1);
    CHECK(s.kind("e") == EdgeKind::TwoJointed);
    CHECK(s.kind("e'") == EdgeKind::TwoJointed);
    CHECK(is_simple(s));
    CHECK(graph_size(s) == 1);
    CHECK(s.fixed_vertices().size() == 2);

    auto g2 = make_elementary_graph(2);
    for (const auto& [e, k] : classify_edges(g2)) CHECK(k == EdgeKind::OneJointed);
    CHECK(graph_size(g2) == 2);
    CHECK(irreducible_components(g2).size() == 1);
    CHECK(g2.quotient().vertex_count() == 4);
    CHECK(g2.quotient().edge_count() == 3);
    CHECK(edge_kind_name(EdgeKind::OneJointed) == "one-jointed");
}

TEST_CASE("axiom violations name the clause") {
    Involution none;
    CHECK(axiom_clause(triangle(), none) == 2);

    CHECK(axiom_clause(MetrizedGraph({"P"}, {{"l", "P", "P"}, {"m", "P", "P"}}),
                       Involution{{}, {{"l", "m"}, {"m", "l"}}}) == 1);

    // a non-fixed pair joined by a single swapped pair of edges to a fixed vertex: valence 1
    Involution thin{{{"A", "A'"}, {"A'", "A"}}, {{"x", "x'"}, {"x'", "x"}}};
    CHECK(axiom_clause(MetrizedGraph({"O", "A", "A'"}, {{"x", "O", "A"}, {"x'", "O", "A'"}}), thin) == 3);

    // two classes over the same pair of orbits: the quotient has a cycle
    Involution cyc{{}, {{"a", "a'"}, {"a'", "a"}, {"b", "b'"}, {"b'", "b"}}};
    CHECK(axiom_clause(MetrizedGraph({"P", "Q"}, {{"a", "P", "Q"}, {"a'", "P", "Q"}, {"b", "P", "Q"}, {"b'", "P", "Q"}}),
                       cyc) == 4);

    Involution bad{{}, {{"a", "b"}}};
    CHECK_THROWS_AS(validate_hyperelliptic(triangle(), bad), Error);
    Involution stretched{{}, {{"e1", "e2"}, {"e2", "e1"}}};
    CHECK_THROWS_AS(validate_hyperelliptic(MetrizedGraph({"P", "Q"}, {{"e1", "P", "Q"}, {"e2", "P", "Q", Rational(2)}}),
                                           stretched),
                    Error);
}

TEST_CASE("ladder classification and nu counts") {
    auto h = make_ladder_graph(3);
    CHECK(h.kind("e1") == EdgeKind::Disjoint);
    CHECK(h.kind("e2") == EdgeKind::Disjoint);
    CHECK(h.kind("e0") == EdgeKind::OneJointed);
    for (int j = 1; j <= 4; ++j) CHECK(h.kind("f" + std::to_string(j)) == EdgeKind::OneJointed);
    auto nu = nu_counts(h, "P2");
    CHECK(nu.nu0 == 2);
    CHECK(nu.nu1 == 1);
    CHECK(nu.nu == 3);
    CHECK(nu_counts(make_elementary_graph(2), "Q").nu1 == 3);
    CHECK_THROWS_AS(nu_counts(make_simple_graph(), "P"), Error);
    CHECK(graph_size(h) == 4);
}

TEST_CASE("size is additive over one-point-sums") {
    auto s = make_simple_graph();
    Involution i{{}, {{"e", "e'"}, {"e'", "e"}, {"e2", "e2'"}, {"e2'", "e2"}}};
    auto g = one_point_sum(s.graph(), "Q", MetrizedGraph({"P2", "Q2"}, {{"e2", "P2", "Q2"}, {"e2'", "P2", "Q2"}}), "P2");
    auto h = validate_hyperelliptic(g, i);
    CHECK(graph_size(h) == 2);
    CHECK(is_semisimple(h));
    CHECK(irreducible_components(h).size() == 2);
}

TEST_CASE("w weights") {
    auto s = make_simple_graph();
    CHECK(w_weight(s, div({{"P", Rational(3)}, {"Q", Rational(-1)}}), "e") == Rational(-1));
    CHECK(w_weight(s, Divisor(), "e") == Rational(0));

    auto g2 = make_elementary_graph(2);
    auto d = div({{"Q", Rational(1)}, {"Q'", Rational(1)}, {"P1", Rational(2)}, {"P2", Rational(-1)}, {"P3", Rational(1, 2)}});
    const Rational deg = d.degree();
    CHECK(w_weight(g2, d, "e1") == min(Rational(2), deg - Rational(2)));
    CHECK(w_weight(g2, d, "e2") == min(Rational(-1), deg + Rational(1)));
    CHECK(w_weight(g2, d, "e3") == min(Rational(1, 2), deg - Rational(1, 2)));

    CHECK_THROWS_AS(w_weight(g2, div({{"Q", Rational(1)}}), "e1"), Error);
}

TEST_CASE("contraction of classes") {
    auto h = make_ladder_graph(2);
    // disjoint class: P1 and P2 merge, P1' and P2' merge
    auto c = contract_classes(h, {"e1"});
    CHECK(c.vertex_map.at("P2") == "P1");
    CHECK_FALSE(c.graph.is_fixed("P1"));
    CHECK(c.graph.graph().valence("P1") == 4);
    CHECK(graph_size(c.graph) == graph_size(h));
    CHECK(irreducible_components(c.graph).size() == irreducible_components(h).size());

    // one-jointed class: the merged vertex is fixed
    auto o = contract_classes(h, {"e0"});
    CHECK(o.graph.is_fixed(o.vertex_map.at("P1")));
    CHECK(graph_size(o.graph) == graph_size(h));
    CHECK(irreducible_components(o.graph).size() > irreducible_components(h).size());

    // two-jointed class collapses a simple component
    auto s = make_simple_graph();
    auto t = contract_classes(s, {"e"});
    CHECK(t.graph.graph().vertex_count() == 1);
    CHECK(graph_size(t.graph) == 0);

    CHECK(restrict_classes(make_elementary_graph(2), {"e1"}).graph.graph().edge_count() == 2);
    CHECK(is_simple(restrict_classes(make_elementary_graph(2), {"e1"}).graph));
}

TEST_CASE("components are stable under the involution") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto h = random_hyperelliptic(seed);
        auto cuts = cut_vertices(h.graph());
        for (const auto& c : irreducible_components(h)) {
            for (const auto& v : c.graph().vertices()) CHECK(c.graph().has_vertex(h.involution().vertex(v)));
        }
        for (const auto& v : cuts) {
            CHECK(h.is_fixed(v));
            CHECK(h.graph().valence(v) >= 4);
        }
    }
}

TEST_CASE("normalize_fiber inserts midpoints and smooths") {
    // A, A' swapped and joined by a fixed edge of length 2, each also joined to O1 and O2
    MetrizedGraph dual({"A", "A'", "O1", "O2"}, {{"m", "A", "A'", Rational(2)},
                                                 {"x", "A", "O1"},
                                                 {"x'", "A'", "O1"},
                                                 {"y", "A", "O2"},
                                                 {"y'", "A'", "O2"}});
    Involution i{{{"A", "A'"}, {"A'", "A"}}, {{"x", "x'"}, {"x'", "x"}, {"y", "y'"}, {"y'", "y"}}};
    auto nf = normalize_fiber(dual, i);
    CHECK(nf.inserted_vertices.size() == 1);
    const VertexId mid = *nf.inserted_vertices.begin();
    CHECK(nf.graph.is_fixed(mid));
    CHECK(nf.graph.graph().total_length() == dual.total_length());
    CHECK(nf.graph.kind("m/a") == EdgeKind::OneJointed);
    CHECK(nf.graph.graph().edge("m/a").length == Rational(1));

    // idempotent on a hyperelliptic input
    auto g2 = make_elementary_graph(2);
    auto again = normalize_fiber(g2.graph(), g2.involution());
    CHECK(again.graph.graph() == g2.graph());

    // chain through a non-fixed degree-2 pair
    MetrizedGraph chain2({"O1", "O2", "O3", "O4", "A", "A'", "B", "B'", "C", "C'"},
                         {{"a1", "O1", "A"}, {"a1'", "O1", "A'"}, {"a2", "O2", "A"}, {"a2'", "O2", "A'"},
                          {"ab", "A", "B", Rational(1, 2)}, {"ab'", "A'", "B'", Rational(1, 2)},
                          {"bc", "B", "C", Rational(1, 3)}, {"bc'", "B'", "C'", Rational(1, 3)},
                          {"c3", "C", "O3"}, {"c3'", "C'", "O3"}, {"c4", "C", "O4"}, {"c4'", "C'", "O4"}});
    Involution ci;
    for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{{"A", "A'"}, {"B", "B'"}, {"C", "C'"}}) {
        ci.vertex_map[a] = b;
        ci.vertex_map[b] = a;
    }
    for (const auto& e : chain2.edges())
        if (e.id.back() != '\'') {
            ci.edge_map[e.id] = e.id + "'";
            ci.edge_map[e.id + "'"] = e.id;
        }
    auto smoothed = normalize_fiber(chain2, ci);
    CHECK(smoothed.removed_vertices == std::set<VertexId>{"B", "B'"});
    CHECK(smoothed.graph.graph().edge("ab+bc").length == Rational(5, 6));
    CHECK(smoothed.graph.kind("ab+bc") == EdgeKind::Disjoint);
    CHECK(smoothed.graph.graph().total_length() == chain2.total_length());

    // metric invariance of the Green's function on surviving vertices
    auto d = div({{"A", Rational(1)}, {"A'", Rational(1)}, {"C", Rational(1)}, {"C'", Rational(1)}});
    auto before = GreenFunction(chain2, d);
    auto after = GreenFunction(smoothed.graph.graph(), d);
    CHECK(before.epsilon() == after.epsilon());
    CHECK(before.pairing("A", "C'") == after.pairing("A", "C'"));

    // a fixed edge whose ends are not exchanged cannot be normalized
    MetrizedGraph bad({"P", "Q"}, {{"e", "P", "Q"}});
    CHECK_THROWS_AS(normalize_fiber(bad, Involution{}), Error);
}
