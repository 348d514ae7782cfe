#include "admgraph/graph_polynomials.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "admgraph/error.hpp"

namespace admgraph {

namespace {

void check_cap(const HyperellipticGraph& h, const EnumerationOptions& options) {
    if (h.classes().size() > options.max_classes)
        throw Error(ErrorCode::EnumerationCap, std::to_string(h.classes().size()) + " edge classes exceed the cap of " +
                                                   std::to_string(options.max_classes));
}

/// Calls visit(subset) for every k-subset of the class ids.
void for_each_subset(const std::vector<std::string>& ids, int k,
                     const std::function<void(const std::set<std::string>&, const Monomial&)>& visit) {
    if (k < 0 || k > static_cast<int>(ids.size())) return;
    std::vector<std::string> chosen;
    std::function<void(std::size_t)> walk = [&](std::size_t start) {
        if (static_cast<int>(chosen.size()) == k) {
            visit(std::set<std::string>(chosen.begin(), chosen.end()), chosen);
            return;
        }
        for (std::size_t i = start; i + (k - chosen.size()) <= ids.size(); ++i) {
            chosen.push_back(ids[i]);
            walk(i + 1);
            chosen.pop_back();
        }
    };
    walk(0);
}

std::vector<std::string> class_list(const HyperellipticGraph& h) {
    std::vector<std::string> out;
    for (const auto& c : h.classes()) out.push_back(c.id);
    std::sort(out.begin(), out.end());
    return out;
}

MultiPoly l_definition(const HyperellipticGraph& h) {
    const int n = graph_size(h);
    MultiPoly out;
    for_each_subset(class_list(h), n, [&](const std::set<std::string>& s, const Monomial& m) {
        HyperellipticMap r = restrict_classes(h, s);
        if (is_semisimple(r.graph) && graph_size(r.graph) == n) out.add_term(m, Rational(1));
    });
    return out;
}

MultiPoly m_definition(const HyperellipticGraph& h) {
    const int n = graph_size(h);
    MultiPoly out;
    for_each_subset(class_list(h), n + 1, [&](const std::set<std::string>& s, const Monomial& m) {
        HyperellipticMap r = restrict_classes(h, s);
        std::set<VertexId> orbits;
        for (const auto& v : r.graph.non_fixed_vertices()) orbits.insert(r.graph.vertex_class(v));
        if (orbits.size() != 1) return;
        out.add_term(m, Rational(r.graph.graph().valence(*orbits.begin()) - 2));
    });
    return out;
}

struct LmPair {
    MultiPoly l;
    MultiPoly m;
};

/// Disjoint-class expansion of an irreducible graph.
LmPair lm_symmetric_irreducible(const HyperellipticGraph& h) {
    if (is_simple(h)) return {MultiPoly::variable(h.classes().front().id), MultiPoly()};

    std::vector<std::string> disjoint;
    for (const auto& c : h.classes())
        if (c.kind == EdgeKind::Disjoint) disjoint.push_back(c.id);

    LmPair out;
    const std::size_t k = disjoint.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::set<std::string> kept, dropped;
        Monomial x;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i)) {
                kept.insert(disjoint[i]);
                x.push_back(disjoint[i]);
            } else {
                dropped.insert(disjoint[i]);
            }
        }
        HyperellipticMap c = contract_classes(h, dropped);
        const HyperellipticGraph& gp = c.graph;

        std::vector<MultiPoly> sigma, tau;
        std::vector<int> nu;
        std::set<VertexId> seen;
        for (const auto& v : gp.non_fixed_vertices()) {
            const VertexId orbit = gp.vertex_class(v);
            if (!seen.insert(orbit).second) continue;
            std::set<std::string> at_v;
            for (const auto& e : gp.graph().incident_edges(orbit))
                if (gp.kind(e) == EdgeKind::OneJointed) at_v.insert(gp.class_of(e));
            std::vector<std::string> vars(at_v.begin(), at_v.end());
            const int nu1 = static_cast<int>(vars.size());
            sigma.push_back(elementary_symmetric(vars, nu1 - 1));
            tau.push_back(elementary_symmetric(vars, nu1));
            nu.push_back(gp.graph().valence(orbit));
        }

        const MultiPoly xk = MultiPoly::monomial(x);
        MultiPoly lterm = xk;
        for (const auto& s : sigma) lterm *= s;
        out.l += lterm;
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            MultiPoly term = xk * tau[i];
            for (std::size_t j = 0; j < sigma.size(); ++j)
                if (j != i) term *= sigma[j];
            out.m += MultiPoly(Rational(nu[i] - 2)) * term;
        }
    }
    return out;
}

LmPair lm_symmetric(const HyperellipticGraph& h) {
    LmPair out{MultiPoly(Rational(1)), MultiPoly()};
    for (const auto& c : irreducible_components(h)) {
        LmPair part = lm_symmetric_irreducible(c);
        out.m = out.m * part.l + out.l * part.m;
        out.l *= part.l;
    }
    return out;
}

}  // namespace

MultiPoly l_polynomial(const HyperellipticGraph& h, Strategy strategy, const EnumerationOptions& options) {
    check_cap(h, options);
    return strategy == Strategy::Definition ? l_definition(h) : lm_symmetric(h).l;
}

MultiPoly m_polynomial(const HyperellipticGraph& h, Strategy strategy, const EnumerationOptions& options) {
    check_cap(h, options);
    return strategy == Strategy::Definition ? m_definition(h) : lm_symmetric(h).m;
}

void check_polarization_shape(const HyperellipticGraph& h, const Divisor& d) {
    d.check_support(h.graph());
    if (d.degree() == Rational(-2)) throw Error(ErrorCode::DegreeMinusTwo, "deg(D) = -2");
    if (!is_invariant(h, d)) throw Error(ErrorCode::PolarizationShape, "divisor is not invariant under the involution");
    for (const auto& v : h.non_fixed_vertices()) {
        const Rational expected(h.graph().valence(v) - 2);
        if (d.coefficient(v) != expected)
            throw Error(ErrorCode::PolarizationShape, "coefficient at non-fixed vertex \"" + v + "\" must be " +
                                                          expected.to_string());
    }
}

RationalFn epsilon_closed_form_fn(const HyperellipticGraph& h, const Divisor& d, const EnumerationOptions& options) {
    check_polarization_shape(h, d);
    const Rational deg = d.degree();
    const Rational k = Rational(2, 3) * deg / (deg + Rational(2));

    MultiPoly linear;
    for (const auto& c : h.classes()) {
        const Rational w = w_weight(h, d, c.id);
        linear.add_term({c.id}, k + w * (deg - w) / (deg + Rational(2)));
    }
    const MultiPoly l = l_polynomial(h, Strategy::Symmetric, options);
    const MultiPoly m = m_polynomial(h, Strategy::Symmetric, options);
    return RationalFn(linear * l + MultiPoly(k) * m, l);
}

Rational epsilon_closed_form(const HyperellipticGraph& h, const Divisor& d, const EnumerationOptions& options) {
    return epsilon_closed_form(h, d, h.class_lengths(), options);
}

Rational epsilon_closed_form(const HyperellipticGraph& h, const Divisor& d,
                             const std::map<std::string, Rational>& lengths, const EnumerationOptions& options) {
    for (const auto& [id, l] : lengths) {
        h.edge_class(id);
        if (l.sign() <= 0) throw Error(ErrorCode::NonpositiveLength, "nonpositive length for class \"" + id + "\"");
    }
    return epsilon_closed_form_fn(h, d, options).evaluate(lengths);
}

HyperellipticGraph with_class_lengths(const HyperellipticGraph& h, const std::map<std::string, Rational>& lengths) {
    std::vector<Edge> edges = h.graph().edges();
    for (auto& e : edges) {
        auto it = lengths.find(h.class_of(e.id));
        if (it != lengths.end()) e.length = it->second;
    }
    for (const auto& [id, l] : lengths) h.edge_class(id);
    return validate_hyperelliptic(MetrizedGraph(h.graph().vertices(), std::move(edges)), h.involution());
}

}  // namespace admgraph
