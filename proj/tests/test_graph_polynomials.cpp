#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "admgraph/error.hpp"
#include "admgraph/graph_polynomials.hpp"
#include "admgraph/potential.hpp"
#include "admgraph/testkit.hpp"
#include "fixtures.hpp"

using namespace admgraph;
using namespace admgraph::fixtures;

namespace {

MultiPoly x(const std::string& name) { return MultiPoly::variable(name); }

std::vector<std::string> elementary_vars(int n) {
    std::vector<std::string> out;
    for (int k = 1; k <= n; ++k) out.push_back("e" + std::to_string(k));
    return out;
}

}  // namespace

TEST_CASE("multipoly arithmetic") {
    auto p = x("a") * x("b") + MultiPoly(Rational(2)) * x("c");
    CHECK(p.degree() == 2);
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.is_multilinear());
    CHECK((x("a") * x("a")).is_multilinear() == false);
    CHECK(p - p == MultiPoly());
    CHECK(p.evaluate({{"a", Rational(2)}, {"b", Rational(3)}, {"c", Rational(1, 2)}}) == Rational(7));
    CHECK(p.evaluate({{"a", Rational(2)}}) == Rational(0));
    // graded lexicographic order: degree first
    CHECK(p.terms().begin()->first == Monomial{"c"});
    CHECK(p.to_string() == "2*c + a*b");
}

TEST_CASE("specialize and coefficient") {
    auto s2 = elementary_symmetric({"x", "y", "z"}, 2);
    CHECK(s2.specialize_zero("z") == x("x") * x("y"));
    CHECK(s2.specialize_zero("w") == s2);
    CHECK(s2.coefficient_poly("x") == x("y") + x("z"));
    CHECK(x("e").coefficient_poly("e") == MultiPoly(Rational(1)));
    CHECK_THROWS_AS((x("a") * x("a")).coefficient_poly("a"), Error);
    CHECK(elementary_symmetric({"x", "y"}, 0) == MultiPoly(Rational(1)));
    CHECK(elementary_symmetric({"x", "y"}, -1).is_zero());
    CHECK(elementary_symmetric({"x", "y"}, 3).is_zero());
}

TEST_CASE("rational functions") {
    RationalFn f(x("a") * x("b"), x("a"));
    CHECK(f == RationalFn(x("b")));
    CHECK(f.specialize_zero("a") == RationalFn(x("b")));
    CHECK(f.evaluate({{"a", Rational(2)}, {"b", Rational(5)}}) == Rational(5));
    CHECK_THROWS_AS(f.evaluate({{"b", Rational(1)}}), Error);
    CHECK_THROWS_AS(RationalFn(x("b"), x("a")).specialize_zero("a"), Error);
    CHECK_THROWS_AS(RationalFn(x("b"), MultiPoly()), Error);
}

TEST_CASE("L and M of the simple graph") {
    auto s = make_simple_graph();
    for (auto strategy : {Strategy::Definition, Strategy::Symmetric}) {
        CHECK(l_polynomial(s, strategy) == x("e"));
        CHECK(m_polynomial(s, strategy).is_zero());
    }
}

TEST_CASE("L and M of elementary graphs") {
    for (int n = 3; n <= 5; ++n) {
        auto g = make_elementary_graph(n - 1);
        auto vars = elementary_vars(n);
        for (auto strategy : {Strategy::Definition, Strategy::Symmetric}) {
            CHECK(l_polynomial(g, strategy) == elementary_symmetric(vars, n - 1));
            CHECK(m_polynomial(g, strategy) == MultiPoly(Rational(n - 2)) * elementary_symmetric(vars, n));
        }
    }
}

TEST_CASE("L and M of the two-rung ladder") {
    auto h = make_ladder_graph(2);
    const auto e0 = x("e0"), e1 = x("e1"), f1 = x("f1"), f2 = x("f2"), f3 = x("f3");
    const auto l = elementary_symmetric({"e0", "f1", "f2", "f3"}, 3) + (e0 + f1) * (f2 + f3) * e1;
    const auto m = MultiPoly(Rational(2)) * e0 * f1 * f2 * f3 + e1 * (e0 * f1 * (f2 + f3) + f2 * f3 * (e0 + f1));
    for (auto strategy : {Strategy::Definition, Strategy::Symmetric}) {
        CHECK(l_polynomial(h, strategy) == l);
        CHECK(m_polynomial(h, strategy) == m);
    }
}

TEST_CASE("enumeration cap") {
    EnumerationOptions tight{2};
    CHECK_THROWS_AS(l_polynomial(make_elementary_graph(2), Strategy::Definition, tight), Error);
}

TEST_CASE("closed form on the simple and elementary graphs") {
    auto s = make_simple_graph();
    CHECK(epsilon_closed_form(s, div({{"P", Rational(1)}, {"Q", Rational(1)}})) == Rational(7, 12));
    auto g2 = make_elementary_graph(2);
    CHECK(epsilon_closed_form(g2, div({{"Q", Rational(1)}, {"Q'", Rational(1)}})) == Rational(10, 9));
    CHECK(epsilon_numeric(g2.graph(), div({{"Q", Rational(1)}, {"Q'", Rational(1)}})).epsilon == Rational(10, 9));
}

TEST_CASE("polarization shape is enforced") {
    auto g2 = make_elementary_graph(2);
    CHECK_THROWS_AS(epsilon_closed_form(g2, div({{"Q", Rational(2)}, {"Q'", Rational(2)}})), Error);
    CHECK_THROWS_AS(epsilon_closed_form(g2, div({{"Q", Rational(1)}, {"Q'", Rational(1)}, {"P1", Rational(-4)}})),
                    Error);
    auto s = make_simple_graph();
    CHECK_THROWS_AS(epsilon_closed_form(s, div({{"P", Rational(-2)}})), Error);
}

TEST_CASE("closed form agrees with the Green's function solve") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto h0 = random_hyperelliptic(seed);
        auto h = with_class_lengths(h0, random_class_lengths(h0, seed + 1000));
        auto d = random_polarization(h, seed + 2000);
        CAPTURE(seed);
        CHECK(epsilon_closed_form(h, d) == epsilon_numeric(h.graph(), d).epsilon);
    }
}

TEST_CASE("strategies agree on random graphs") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        auto h = random_hyperelliptic(seed);
        CAPTURE(seed);
        auto l = l_polynomial(h, Strategy::Definition);
        CHECK(l == l_polynomial(h, Strategy::Symmetric));
        CHECK(m_polynomial(h, Strategy::Definition) == m_polynomial(h, Strategy::Symmetric));
        CHECK(l.is_homogeneous());
        CHECK(l.is_multilinear());
        CHECK(l.degree() == graph_size(h));
    }
}

TEST_CASE("corollary bounds on epsilon for nonnegative degree") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 160; ++seed) {
        auto h0 = seed % 2 ? random_hyperelliptic(seed) : random_irreducible(seed, 2 + static_cast<int>(seed % 5));
        auto h = with_class_lengths(h0, random_class_lengths(h0, seed + 500));
        auto d = random_polarization(h, seed + 900);
        const Rational deg = d.degree();
        if (deg < Rational(0)) continue;
        const Rational k = deg / (deg + Rational(2));
        bool small = true;
        for (const auto& c : irreducible_components(h)) small = small && graph_size(c) < 5;
        Rational general, sharp;
        for (const auto& c : h.classes()) {
            const Rational w = w_weight(h, d, c.id);
            if (w.is_zero()) {
                general += Rational(5, 6) * k * c.length;
                sharp += Rational(5, 6) * k * c.length;
            } else {
                const Rational tail = w * (deg - w) / (deg + Rational(2));
                general += (Rational(4, 3) * k + tail) * c.length;
                sharp += (k + tail) * c.length;
            }
        }
        const Rational eps = epsilon_numeric(h.graph(), d).epsilon;
        CAPTURE(seed);
        CHECK(eps <= general);
        if (small) CHECK(eps <= sharp);
        ++checked;
    }
    CHECK(checked > 50);
}
