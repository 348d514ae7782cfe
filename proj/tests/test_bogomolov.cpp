#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "admgraph/bogomolov.hpp"
#include "admgraph/error.hpp"
#include "admgraph/testkit.hpp"

using namespace admgraph;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

Involution swap_edges(const std::vector<std::pair<EdgeId, EdgeId>>& pairs) {
    Involution i;
    for (const auto& [a, b] : pairs) {
        i.edge_map[a] = b;
        i.edge_map[b] = a;
    }
    return i;
}

// two genus-1 components joined by a swapped pair of nodes, g = 3
FiberConfiguration banana() {
    return {MetrizedGraph({"A", "B"}, {{"n", "A", "B"}, {"n'", "A", "B"}}), {{"A", 1}, {"B", 1}},
            swap_edges({{"n", "n'"}}), 3};
}

InvariantCounts counts(int g, std::vector<long> xi, std::vector<long> delta) {
    auto c = InvariantCounts::zero(g);
    for (std::size_t k = 0; k < xi.size(); ++k) c.xi[k] = xi[k];
    for (std::size_t k = 0; k < delta.size(); ++k) c.delta[k] = delta[k];
    return c;
}

}  // namespace

TEST_CASE("fiber validation") {
    CHECK_NOTHROW(validate_fiber(banana()));
    auto bad = banana();
    bad.g = 4;
    CHECK(code_of([&] { validate_fiber(bad); }) == ErrorCode::InvalidConfiguration);
    FiberConfiguration low{MetrizedGraph::one_point("A"), {{"A", 1}}, std::nullopt, 1};
    CHECK(code_of([&] { validate_fiber(low); }) == ErrorCode::GenusOutOfRange);
    FiberConfiguration apart{MetrizedGraph({"A", "B"}, {}), {{"A", 1}, {"B", 1}}, std::nullopt, 2};
    CHECK(code_of([&] { validate_fiber(apart); }) == ErrorCode::DisconnectedGraph);
    auto swapped = banana();
    swapped.genus["B"] = 0;
    swapped.genus["A"] = 2;
    swapped.involution->vertex_map = {{"A", "B"}, {"B", "A"}};
    CHECK(code_of([&] { validate_fiber(swapped); }) == ErrorCode::InvolutionMalformed);
}

TEST_CASE("node types") {
    FiberConfiguration bridge{MetrizedGraph({"A", "B"}, {{"n", "A", "B"}}), {{"A", 1}, {"B", 1}}, std::nullopt, 2};
    CHECK(node_type(bridge, "n").type == 1);

    FiberConfiguration loop{MetrizedGraph({"A"}, {{"n", "A", "A"}}), {{"A", 1}}, std::nullopt, 2};
    CHECK(node_type(loop, "n").type == 0);

    FiberConfiguration pair{MetrizedGraph({"A", "B"}, {{"n", "A", "B"}, {"m", "A", "B"}}), {{"B", 2}}, std::nullopt, 3};
    CHECK(node_type(pair, "n").type == 0);
    CHECK(node_type(pair, "m").type == 0);
    CHECK(arithmetic_genus(pair, {"A", "B"}) == 3);
    CHECK(arithmetic_genus(pair, {"A", "B"}, {"n"}) == 2);
    CHECK(code_of([&] { node_type(pair, "zz"); }) == ErrorCode::UnknownEdge);
}

TEST_CASE("node subtypes") {
    auto b = banana();
    CHECK(node_subtype(b, "n").subtype == 1);
    CHECK(node_subtype(b, "n'").subtype == 1);

    FiberConfiguration loop{MetrizedGraph({"A"}, {{"n", "A", "A"}}), {{"A", 2}}, Involution{}, 3};
    CHECK(node_subtype(loop, "n").subtype == 0);

    FiberConfiguration no_inv{MetrizedGraph({"A"}, {{"n", "A", "A"}}), {{"A", 2}}, std::nullopt, 3};
    CHECK(code_of([&] { node_subtype(no_inv, "n"); }) == ErrorCode::MissingInvolution);

    FiberConfiguration bridge{MetrizedGraph({"A", "B"}, {{"n", "A", "B"}}), {{"A", 1}, {"B", 2}}, Involution{}, 3};
    CHECK(code_of([&] { node_subtype(bridge, "n"); }) == ErrorCode::NotTypeZero);

    // three parallel nodes, two swapped: deleting the pair leaves one component
    FiberConfiguration triple{MetrizedGraph({"A", "B"}, {{"n", "A", "B"}, {"n'", "A", "B"}, {"m", "A", "B"}}),
                              {{"A", 1}},
                              swap_edges({{"n", "n'"}}),
                              3};
    CHECK(code_of([&] { node_subtype(triple, "n"); }) == ErrorCode::UnexpectedComponentCount);
}

TEST_CASE("invariant counts") {
    FiberConfiguration smooth{MetrizedGraph::one_point("A"), {{"A", 3}}, Involution{}, 3};
    CHECK(count_invariants(smooth).all_zero());

    FiberConfiguration loop{MetrizedGraph({"A"}, {{"n", "A", "A"}}), {{"A", 2}}, Involution{}, 3};
    auto c = count_invariants(loop);
    CHECK(c.xi_at(0) == 1);
    CHECK(c.delta0() == 1);

    auto b = count_invariants(banana());
    CHECK(b.xi_at(0) == 0);
    CHECK(b.xi_at(1) == 1);
    CHECK(b.delta0() == 2);
    CHECK(b.delta_at(1) == 0);
}

TEST_CASE("omega and epsilon bounds") {
    CHECK(omega_self_intersection(counts(3, {1}, {})) == Rational(2, 7));
    CHECK(omega_self_intersection(counts(3, {}, {1})) == Rational(17, 7));
    CHECK(omega_self_intersection(InvariantCounts::zero(4)) == Rational(0));

    CHECK(epsilon_fiber_upper(counts(5, {1}, {})) == Rational(1, 3));
    CHECK(epsilon_fiber_upper(counts(3, {0, 1}, {})) == Rational(4, 3));
    CHECK(epsilon_fiber_upper(InvariantCounts::zero(6)) == Rational(0));
    CHECK(code_of([&] { epsilon_fiber_upper(InvariantCounts::zero(2)); }) == ErrorCode::GenusOutOfRange);
}

TEST_CASE("r0 values") {
    CHECK(r0_bound(counts(3, {1}, {})) == Rational(1, 63));
    CHECK(r0_bound(counts(5, {0, 1}, {})) == Rational(64, 165));
    CHECK(r0_bound(InvariantCounts::zero(3)) == Rational(0));
    CHECK(code_of([&] { r0_bound(InvariantCounts::zero(2)); }) == ErrorCode::GenusBelowThree);

    auto mixed = counts(5, {0, 2}, {1});
    auto report = pairing_radicand(mixed);
    CHECK(report.radicand == Rational(2) * Rational(64, 165) + Rational(16, 55) * Rational(16));
    CHECK(report.radicand == r0_bound(mixed));
    Rational total;
    for (const auto& t : report.terms) total += t.contribution;
    CHECK(total == report.radicand);
    CHECK(pairing_radicand(InvariantCounts::zero(3)).warnings.size() == 1);
}

TEST_CASE("r0 is positive on every nonzero count") {
    for (int g = 3; g <= 12; ++g) {
        auto z = InvariantCounts::zero(g);
        for (std::size_t j = 0; j < z.xi.size(); ++j) {
            auto c = z;
            c.xi[j] = 1;
            CAPTURE(g);
            CAPTURE(j);
            CHECK(r0_bound(c) > Rational(0));
            CHECK(pairing_radicand(c).radicand == r0_bound(c));
        }
        for (std::size_t i = 0; i < z.delta.size(); ++i) {
            auto c = z;
            c.delta[i] = 1;
            CHECK(r0_bound(c) > Rational(0));
        }
    }
}

TEST_CASE("canonical polarization") {
    auto d = canonical_polarization(banana());
    CHECK(d.coefficient("A") == Rational(2));
    CHECK(d.degree() == Rational(4));
}

TEST_CASE("fiber epsilon splits and is dominated") {
    auto b = fiber_epsilon(banana());
    CHECK(b.direct == b.hyperelliptic_part + b.tree_part);

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto cfg = random_fiber(seed);
        CAPTURE(seed);
        CHECK_NOTHROW(validate_fiber(cfg));
        auto eps = fiber_epsilon(cfg);
        CHECK(eps.direct == eps.hyperelliptic_part + eps.tree_part);
        auto c = count_invariants(cfg);
        CHECK(epsilon_fiber_upper(c) >= eps.direct);
        if (!c.all_zero()) CHECK(r0_bound(c) > Rational(0));
    }
}
