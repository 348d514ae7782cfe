#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "admgraph/bogomolov.hpp"
#include "admgraph/hyperelliptic.hpp"

namespace admgraph {

/// Quotient tree with a fixed/non-fixed label per vertex and a length per edge.
struct CoverSpec {
    struct TreeEdge {
        int a;
        int b;
        Rational length;
        bool crossed = false;  ///< attachment choice when both ends are non-fixed
    };
    std::vector<bool> fixed;
    std::vector<TreeEdge> edges;
};

/// Builds the double cover: fixed tree vertex "v<k>" or swapped pair "v<k>", "v<k>'",
/// and one swapped edge pair "e<k>", "e<k>'" per tree edge.
HyperellipticGraph build_cover(const CoverSpec& spec);

struct SizeBounds {
    int min_size = 1;
    int max_size = 5;
    int max_tree_vertices = 9;
};

HyperellipticGraph random_hyperelliptic(std::uint64_t seed, const SizeBounds& bounds = {});

/// Irreducible graph of the given size >= 2: every quotient leaf is fixed and every inner
/// quotient vertex is non-fixed with degree >= 3.
HyperellipticGraph random_irreducible(std::uint64_t seed, int size);

/// Coefficient valence - 2 at non-fixed vertices, a value from {-1,0,1,2,3} at fixed ones;
/// resampled until deg != -2.
Divisor random_polarization(const HyperellipticGraph& h, std::uint64_t seed);

/// Class lengths drawn from a small set of positive rationals.
std::map<std::string, Rational> random_class_lengths(const HyperellipticGraph& h, std::uint64_t seed);

/// Two fixed vertices P, Q and edges e, e' swapped by the involution.
HyperellipticGraph make_simple_graph(const Rational& length = Rational(1));

/// Elementary graph of size n: non-fixed Q, Q' joined to fixed P1..P(n+1) by e<i>, e<i>'.
HyperellipticGraph make_elementary_graph(int n, const Rational& length = Rational(1));

/// Ladder with n >= 2 rungs: fixed O, Q1..Q(n+1); non-fixed P1..Pn and their images.
/// e0 = O-P1, e<i> = P<i>-P<i+1>, f<j> = Q<j>-P<j>, f<n+1> = Q<n+1>-P<n>.
HyperellipticGraph make_ladder_graph(int n);

/// valence(v) - 2 at non-fixed vertices and `fixed_coefficient` at fixed ones.
Divisor closed_form_polarization(const HyperellipticGraph& h, const Rational& fixed_coefficient = Rational());

/// Random hyperelliptic fiber with type-zero part coming from a cover and optional
/// positive-type tails; genus at least 3.
FiberConfiguration random_fiber(std::uint64_t seed);

}  // namespace admgraph
