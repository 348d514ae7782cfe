#include "admgraph/potential.hpp"

#include "admgraph/error.hpp"

namespace admgraph {

namespace {

/// Inverse of the Laplacian grounded at vertex 0, padded with a zero row and column so
/// that f = M b solves L f = b with f(v_0) = 0 whenever sum(b) = 0.
Matrix grounded_inverse(const MetrizedGraph& g) {
    const std::size_t n = g.vertex_count();
    Matrix out(n, n);
    if (n <= 1) return out;
    Matrix lap(n - 1, n - 1);
    for (const auto& e : g.edges()) {
        const Rational w = Rational(1) / e.length;
        const std::size_t a = g.vertex_index(e.u), b = g.vertex_index(e.v);
        if (a > 0) lap(a - 1, a - 1) += w;
        if (b > 0) lap(b - 1, b - 1) += w;
        if (a > 0 && b > 0) {
            lap(a - 1, b - 1) -= w;
            lap(b - 1, a - 1) -= w;
        }
    }
    Matrix inv = solve(std::move(lap), Matrix::identity(n - 1));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) out(i, j) = inv(i - 1, j - 1);
    return out;
}

Rational resistance_from(const Matrix& m, std::size_t p, std::size_t q) {
    return m(p, p) + m(q, q) - m(p, q) - m(p, q);
}

}  // namespace

Rational Measure::mass(const VertexId& v) const {
    auto it = vertex_masses.find(v);
    return it == vertex_masses.end() ? Rational() : it->second;
}

Rational Measure::density(const EdgeId& e) const {
    auto it = edge_densities.find(e);
    return it == edge_densities.end() ? Rational() : it->second;
}

Rational Measure::total_mass(const MetrizedGraph& g) const {
    Rational total;
    for (const auto& [v, m] : vertex_masses) total += m;
    for (const auto& [e, rho] : edge_densities) total += rho * g.edge(e).length;
    return total;
}

Rational effective_resistance(const MetrizedGraph& g, const VertexId& p, const VertexId& q) {
    const std::size_t a = g.vertex_index(p), b = g.vertex_index(q);
    require_analytic(g);
    if (a == b) return Rational();
    return resistance_from(grounded_inverse(g), a, b);
}

ExtendedRational cross_resistance(const MetrizedGraph& g, const EdgeId& id) {
    const Edge& e = g.edge(id);
    require_analytic(g);
    MetrizedGraph rest = delete_edges(g, {id});
    if (!rest.is_connected()) return ExtendedRational::infinity();
    return effective_resistance(rest, e.u, e.v);
}

Measure canonical_measure(const MetrizedGraph& g) {
    require_analytic(g);
    Measure mu;
    for (const auto& v : g.vertices()) mu.vertex_masses[v] = Rational(1) - Rational(g.valence(v), 2);
    const Matrix m = grounded_inverse(g);
    for (const auto& e : g.edges()) {
        // parallel law: R = l r / (l + r), so 1/(l + r) = (l - R) / l^2; bridges give R = l
        const Rational r = resistance_from(m, g.vertex_index(e.u), g.vertex_index(e.v));
        mu.edge_densities[e.id] = (e.length - r) / (e.length * e.length);
    }
    return mu;
}

Measure admissible_measure(const MetrizedGraph& g, const Divisor& d) {
    d.check_support(g);
    const Rational denom = d.degree() + Rational(2);
    if (denom.is_zero()) throw Error(ErrorCode::DegreeMinusTwo, "deg(D) = -2");
    Measure mu = canonical_measure(g);
    for (auto& [v, m] : mu.vertex_masses) m = (d.coefficient(v) + Rational(2) * m) / denom;
    for (auto& [e, rho] : mu.edge_densities) rho = Rational(2) * rho / denom;
    return mu;
}

Rational PiecewisePotential::at(const VertexId& v) const {
    auto it = vertex_values.find(v);
    if (it == vertex_values.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex \"" + v + "\"");
    return it->second;
}

Rational PiecewisePotential::at(const Edge& edge, const Rational& s) const {
    auto it = edge_terms.find(edge.id);
    if (it == edge_terms.end()) throw Error(ErrorCode::UnknownEdge, "unknown edge \"" + edge.id + "\"");
    if (s.sign() < 0 || s > edge.length) throw Error(ErrorCode::OutOfRange, "point outside edge \"" + edge.id + "\"");
    const auto& q = it->second;
    return at(edge.u) + q.start_slope * s + q.second_derivative * s * s / Rational(2);
}

Rational integrate(const MetrizedGraph& g, const PiecewisePotential& f, const Measure& mu) {
    Rational total;
    for (const auto& [v, m] : mu.vertex_masses) total += m * f.at(v);
    for (const auto& e : g.edges()) {
        const Rational rho = mu.density(e.id);
        if (rho.is_zero()) continue;
        const auto& q = f.edge_terms.at(e.id);
        const Rational& l = e.length;
        // integral over [0,l] of f(u) + b s + (a/2) s^2
        total += rho * (f.at(e.u) * l + q.start_slope * l * l / Rational(2) +
                        q.second_derivative * l * l * l / Rational(6));
    }
    return total;
}

GreenFunction::GreenFunction(const MetrizedGraph& g, const Divisor& d)
    : graph_(g), divisor_(d), measure_(admissible_measure(g, d)) {
    const std::size_t n = g.vertex_count();
    const Matrix m = grounded_inverse(g);

    // (L f)_p = [p == s] - m_p - sum_{e at p} rho_e l_e / 2
    std::vector<Rational> base(n);
    for (std::size_t i = 0; i < n; ++i) base[i] = -measure_.mass(g.vertices()[i]);
    for (const auto& e : g.edges()) {
        const Rational half = measure_.density(e.id) * e.length / Rational(2);
        base[g.vertex_index(e.u)] -= half;
        base[g.vertex_index(e.v)] -= half;
    }

    values_ = Matrix(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t y = 0; y < n; ++y) {
            Rational f;
            for (std::size_t k = 0; k < n; ++k) {
                Rational b = base[k];
                if (k == s) b += Rational(1);
                if (!b.is_zero() && !m(y, k).is_zero()) f += m(y, k) * b;
            }
            values_(s, y) = f;
        }
        // shift so that the integral against mu vanishes (mu has unit mass)
        PiecewisePotential raw = potential(g.vertices()[s]);
        const Rational shift = integrate(g, raw, measure_);
        for (std::size_t y = 0; y < n; ++y) values_(s, y) -= shift;
    }

    const VertexId& first = g.vertices().front();
    constant_ = pairing(divisor_, first) + pairing(first, first);
    verify();
}

Rational GreenFunction::pairing(const VertexId& p, const VertexId& q) const {
    return values_(graph_.vertex_index(p), graph_.vertex_index(q));
}

Rational GreenFunction::pairing(const Divisor& d, const VertexId& y) const {
    Rational total;
    for (const auto& [v, a] : d.coefficients()) total += a * pairing(v, y);
    return total;
}

Rational GreenFunction::pairing(const Divisor& a, const Divisor& b) const {
    Rational total;
    for (const auto& [v, c] : b.coefficients()) total += c * pairing(a, v);
    return total;
}

PiecewisePotential GreenFunction::potential(const VertexId& source) const {
    const std::size_t s = graph_.vertex_index(source);
    PiecewisePotential f;
    for (std::size_t y = 0; y < graph_.vertex_count(); ++y) f.vertex_values[graph_.vertices()[y]] = values_(s, y);
    for (const auto& e : graph_.edges()) {
        const Rational rho = measure_.density(e.id);
        const Rational du = f.vertex_values[e.u], dv = f.vertex_values[e.v];
        f.edge_terms[e.id] = EdgeQuadratic{rho, (dv - du) / e.length - rho * e.length / Rational(2)};
    }
    return f;
}

Rational GreenFunction::epsilon() const {
    return Rational(2) * divisor_.degree() * constant_ - pairing(divisor_, divisor_);
}

void GreenFunction::verify() const {
    const auto& vs = graph_.vertices();
    const std::size_t n = vs.size();
    auto fail = [](const std::string& what) { throw Error(ErrorCode::PropertyViolation, "green function: " + what); };

    if (measure_.total_mass(graph_) != Rational(1)) fail("measure does not have unit mass");
    for (std::size_t s = 0; s < n; ++s) {
        PiecewisePotential f = potential(vs[s]);
        for (std::size_t y = 0; y < n; ++y)
            if (values_(s, y) != values_(y, s)) fail("asymmetric at (" + vs[s] + ", " + vs[y] + ")");
        // sum of outgoing derivatives at p equals mass(p) - [p == s]
        std::vector<Rational> flux(n);
        for (const auto& e : graph_.edges()) {
            const auto& q = f.edge_terms.at(e.id);
            flux[graph_.vertex_index(e.u)] += q.start_slope;
            flux[graph_.vertex_index(e.v)] -= q.start_slope + q.second_derivative * e.length;
        }
        for (std::size_t p = 0; p < n; ++p) {
            Rational expected = measure_.mass(vs[p]);
            if (p == s) expected -= Rational(1);
            if (flux[p] != expected) fail("flux balance fails at " + vs[p]);
        }
        if (!integrate(graph_, f, measure_).is_zero()) fail("integral against mu is not zero");
    }
    for (const auto& y : vs)
        if (pairing(divisor_, y) + pairing(y, y) != constant_)
            throw Error(ErrorCode::ConstancyViolation, "g(D,y) + g(y,y) is not constant (at " + y + ")");
}

PiecewisePotential green_function(const MetrizedGraph& g, const Divisor& d, const VertexId& source) {
    g.vertex_index(source);
    return GreenFunction(g, d).potential(source);
}

Rational green_pairing(const MetrizedGraph& g, const Divisor& d, const VertexId& p, const VertexId& q) {
    g.vertex_index(p);
    g.vertex_index(q);
    return GreenFunction(g, d).pairing(p, q);
}

EpsilonValue epsilon_numeric(const MetrizedGraph& g, const Divisor& d) {
    GreenFunction green(g, d);
    return {green.epsilon(), green.constant()};
}

}  // namespace admgraph
