#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "admgraph/bogomolov.hpp"
#include "admgraph/graph_polynomials.hpp"
#include "admgraph/io.hpp"
#include "admgraph/potential.hpp"
#include "admgraph/testkit.hpp"

namespace admgraph::cli {

namespace {

// usage-level failure that is not a CLI11 parse error (missing file, bad flag value)
struct UsageError {
    std::string code;
    std::string message;
};

struct Options {
    std::string graph;
    std::string divisor;
    std::string strategy = "definition";
    std::optional<std::size_t> max_classes;
    std::string from, to, edge, source;
    int genus = 0;
    long xi0 = 0;
    std::vector<std::string> xi, delta;
    std::string fiber;
    bool report = false;
    std::uint64_t seed = 1;
    int min_size = 1, max_size = 5;
    bool gen_fiber = false;
};

GraphDocument load(const Options& o) {
    if (o.graph.empty()) throw UsageError{"missing_graph", "a graph file is required"};
    std::string text;
    try {
        text = read_file(o.graph);
    } catch (const std::runtime_error& e) {
        throw UsageError{"file_not_found", e.what()};
    }
    return parse_graph_document(text);
}

Divisor divisor_of(const Options& o, const GraphDocument& doc) {
    Divisor d;
    if (!o.divisor.empty()) {
        Json j;
        try {
            j = Json::parse(o.divisor);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::MalformedJson, std::string("--divisor: ") + e.what());
        }
        d = divisor_from_json(j, "--divisor");
    } else if (doc.divisor) {
        d = *doc.divisor;
    }
    d.check_support(doc.graph);
    return d;
}

EnumerationOptions enumeration(const Options& o) {
    EnumerationOptions opts;
    if (const char* env = std::getenv("ADMGRAPH_MAX_CLASSES")) {
        try {
            opts.max_classes = std::stoul(env);
        } catch (const std::exception&) {
            throw UsageError{"bad_environment", std::string("ADMGRAPH_MAX_CLASSES is not a number: ") + env};
        }
    }
    if (o.max_classes) opts.max_classes = *o.max_classes;
    return opts;
}

Strategy strategy_of(const Options& o) { return o.strategy == "symmetric" ? Strategy::Symmetric : Strategy::Definition; }

std::pair<int, long> key_value(const std::string& text, const std::string& flag) {
    const auto eq = text.find('=');
    try {
        if (eq == std::string::npos) throw std::invalid_argument("no '='");
        std::size_t used = 0;
        const int k = std::stoi(text.substr(0, eq), &used);
        if (used != eq) throw std::invalid_argument("index");
        const std::string rest = text.substr(eq + 1);
        const long v = std::stol(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("value");
        return {k, v};
    } catch (const std::exception&) {
        throw UsageError{"bad_flag", flag + " expects index=count, got \"" + text + "\""};
    }
}

InvariantCounts counts_from_flags(const Options& o) {
    if (o.genus < 2) throw UsageError{"bad_flag", "--genus must be at least 2"};
    auto c = InvariantCounts::zero(o.genus);
    c.xi[0] = o.xi0;
    for (const auto& s : o.xi) {
        auto [j, v] = key_value(s, "--xi");
        if (j < 0 || static_cast<std::size_t>(j) >= c.xi.size())
            throw UsageError{"bad_flag", "--xi index " + std::to_string(j) + " out of range for genus " + std::to_string(o.genus)};
        c.xi[static_cast<std::size_t>(j)] = v;
    }
    for (const auto& s : o.delta) {
        auto [i, v] = key_value(s, "--delta");
        if (i < 1 || static_cast<std::size_t>(i) > c.delta.size())
            throw UsageError{"bad_flag", "--delta index " + std::to_string(i) + " out of range for genus " + std::to_string(o.genus)};
        c.delta[static_cast<std::size_t>(i - 1)] = v;
    }
    return c;
}

Json counts_json(const InvariantCounts& c) {
    return {{"g", c.g}, {"xi", c.xi}, {"delta", c.delta}, {"delta0", c.delta0()}};
}

Json measure_json(const MetrizedGraph& g, const Measure& m) {
    Json masses = Json::object(), densities = Json::object();
    for (const auto& v : g.vertices()) masses[v] = m.mass(v).to_string();
    for (const auto& e : g.edges()) densities[e.id] = m.density(e.id).to_string();
    return {{"masses", masses}, {"densities", densities}, {"total", m.total_mass(g).to_string()}};
}

Json cmd_validate(const Options& o, int& code) {
    auto doc = load(o);
    auto report = validate_graph(doc.graph);
    Json out = {{"valid", report.valid()},
                {"connected", report.connected},
                {"vertices", doc.graph.vertex_count()},
                {"edges", doc.graph.edge_count()},
                {"issues", report.issues}};
    if (doc.involution) {
        Json hyp;
        try {
            auto h = validate_hyperelliptic(doc.graph, *doc.involution);
            hyp = {{"valid", true}, {"size", graph_size(h)}, {"classes", h.classes().size()}};
        } catch (const Error& e) {
            hyp = {{"valid", false}, {"code", error_code_name(e.code())}, {"message", e.what()}};
            out["valid"] = false;
        }
        out["hyperelliptic"] = hyp;
    }
    if (!doc.genus.empty()) {
        try {
            auto cfg = fiber_from(doc);
            out["fiber"] = {{"valid", true}, {"g", cfg.g}};
        } catch (const Error& e) {
            out["fiber"] = {{"valid", false}, {"code", error_code_name(e.code())}, {"message", e.what()}};
            out["valid"] = false;
        }
    }
    if (!out["valid"].get<bool>()) code = exit_domain;
    return out;
}

Json cmd_resistance(const Options& o) {
    auto doc = load(o);
    const auto& g = doc.graph;
    require_analytic(g);
    if (!o.edge.empty()) return {{"edge", o.edge}, {"cross_resistance", cross_resistance(g, o.edge).to_string()}};
    if (!o.from.empty() || !o.to.empty()) {
        if (o.from.empty() || o.to.empty()) throw UsageError{"bad_flag", "--from and --to go together"};
        return {{"from", o.from}, {"to", o.to}, {"resistance", effective_resistance(g, o.from, o.to).to_string()}};
    }
    Json table = Json::object();
    for (const auto& p : g.vertices()) {
        Json row = Json::object();
        for (const auto& q : g.vertices()) row[q] = effective_resistance(g, p, q).to_string();
        table[p] = row;
    }
    return {{"resistance", table}};
}

Json cmd_measure(const Options& o) {
    auto doc = load(o);
    require_analytic(doc.graph);
    const bool has_divisor = !o.divisor.empty() || doc.divisor.has_value();
    if (!has_divisor) return {{"measure", "canonical"}, {"value", measure_json(doc.graph, canonical_measure(doc.graph))}};
    auto d = divisor_of(o, doc);
    return {{"measure", "admissible"}, {"divisor", to_json(d)}, {"value", measure_json(doc.graph, admissible_measure(doc.graph, d))}};
}

Json cmd_green(const Options& o) {
    auto doc = load(o);
    auto d = divisor_of(o, doc);
    GreenFunction green(doc.graph, d);
    std::vector<VertexId> sources;
    if (!o.source.empty()) {
        if (!doc.graph.has_vertex(o.source)) throw Error(ErrorCode::UnknownVertex, "unknown vertex \"" + o.source + "\"");
        sources.push_back(o.source);
    } else {
        sources = doc.graph.vertices();
    }
    Json values = Json::object();
    for (const auto& p : sources) {
        Json row = Json::object();
        for (const auto& q : doc.graph.vertices()) row[q] = green.pairing(p, q).to_string();
        values[p] = row;
    }
    return {{"green", values}, {"c", green.constant().to_string()}};
}

Json cmd_epsilon(const Options& o) {
    auto doc = load(o);
    auto e = epsilon_numeric(doc.graph, divisor_of(o, doc));
    return {{"epsilon", e.epsilon.to_string()}, {"c", e.c.to_string()}};
}

Divisor closed_form_divisor(const Options& o, const GraphDocument& doc, const HyperellipticGraph& h) {
    if (o.divisor.empty() && !doc.divisor) return closed_form_polarization(h);
    return divisor_of(o, doc);
}

Json cmd_epsilon_closed(const Options& o) {
    auto doc = load(o);
    auto h = hyperelliptic_from(doc);
    auto d = closed_form_divisor(o, doc, h);
    auto opts = enumeration(o);
    auto fn = epsilon_closed_form_fn(h, d, opts);
    return {{"epsilon", fn.evaluate(h.class_lengths()).to_string()}, {"divisor", to_json(d)}, {"closed_form", to_json(fn)}};
}

Json cmd_poly(const Options& o, bool l) {
    auto doc = load(o);
    auto h = hyperelliptic_from(doc);
    auto opts = enumeration(o);
    auto p = l ? l_polynomial(h, strategy_of(o), opts) : m_polynomial(h, strategy_of(o), opts);
    return {{"strategy", o.strategy},
            {"size", graph_size(h)},
            {"polynomial", to_json(p)},
            {"value", p.evaluate(h.class_lengths()).to_string()}};
}

Json cmd_classify_edges(const Options& o) {
    auto doc = load(o);
    auto h = hyperelliptic_from(doc);
    Json classes = Json::array();
    for (const auto& c : h.classes())
        classes.push_back({{"id", c.id}, {"members", c.members}, {"kind", edge_kind_name(c.kind)}, {"length", c.length.to_string()}});
    return {{"size", graph_size(h)},
            {"simple", is_simple(h)},
            {"semisimple", is_semisimple(h)},
            {"irreducible_components", irreducible_components(h).size()},
            {"fixed_vertices", h.fixed_vertices()},
            {"classes", classes}};
}

Json cmd_classify_nodes(const Options& o) {
    auto doc = load(o);
    auto cfg = fiber_from(doc);
    Json nodes = Json::array();
    for (const auto& e : cfg.dual.edges()) {
        auto t = node_type(cfg, e.id);
        Json entry = {{"id", e.id}, {"type", t.type}};
        if (t.type == 0 && cfg.involution) entry["subtype"] = *node_subtype(cfg, e.id).subtype;
        nodes.push_back(entry);
    }
    Json out = {{"g", cfg.g}, {"nodes", nodes}};
    if (cfg.involution) out["counts"] = counts_json(count_invariants(cfg));
    return out;
}

Json cmd_bound(const Options& o) {
    InvariantCounts c;
    if (!o.fiber.empty()) {
        Options f = o;
        f.graph = o.fiber;
        c = count_invariants(fiber_from(load(f)));
    } else {
        c = counts_from_flags(o);
    }
    Json out = {{"r0", r0_bound(c).to_string()}};
    if (o.report) {
        auto r = pairing_radicand(c);
        Json terms = Json::array();
        for (const auto& t : r.terms)
            terms.push_back({{"name", t.name},
                             {"count", t.count},
                             {"omega_coefficient", t.omega_coefficient.to_string()},
                             {"epsilon_coefficient", t.epsilon_coefficient.to_string()},
                             {"contribution", t.contribution.to_string()}});
        out["counts"] = counts_json(c);
        out["radicand"] = r.radicand.to_string();
        out["omega"] = r.omega.to_string();
        out["epsilon_upper"] = r.epsilon_upper.to_string();
        out["terms"] = terms;
        out["warnings"] = r.warnings;
    }
    return out;
}

Json cmd_compare(const Options& o, int& code) {
    auto doc = load(o);
    auto h = hyperelliptic_from(doc);
    auto d = closed_form_divisor(o, doc, h);
    const Rational closed = epsilon_closed_form(h, d, enumeration(o));
    const auto numeric = epsilon_numeric(h.graph(), d);
    const bool agree = closed == numeric.epsilon;
    if (!agree) code = exit_domain;
    return {{"closed_form", closed.to_string()}, {"numeric", numeric.epsilon.to_string()}, {"agree", agree}};
}

Json cmd_gen(const Options& o) {
    if (o.gen_fiber) return to_json(document_from(random_fiber(o.seed)));
    SizeBounds b;
    b.min_size = o.min_size;
    b.max_size = o.max_size;
    auto h = random_hyperelliptic(o.seed, b);
    return to_json(document_from(h, random_polarization(h, o.seed)));
}

void error_json(std::ostream& err, const std::string& code, const std::string& message, const Json& issues = nullptr) {
    Json e = {{"code", code}, {"message", message}};
    if (!issues.is_null()) e["issues"] = issues;
    err << Json{{"error", e}}.dump(2) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact admissible invariants of metrized and hyperelliptic graphs", "admgraph"};
    app.require_subcommand(1);
    app.add_option("--max-classes", o.max_classes, "Cap on edge classes for subset enumeration");

    auto graph_arg = [&](CLI::App* s) { s->add_option("graph,--graph", o.graph, "Graph document (JSON)"); };
    auto divisor_arg = [&](CLI::App* s) {
        s->add_option("--divisor", o.divisor, "Divisor override as inline JSON, e.g. {\"P\":\"1\"}");
    };

    auto* validate = app.add_subcommand("validate", "Check a graph, hyperelliptic graph or fiber document");
    graph_arg(validate);
    auto* resistance = app.add_subcommand("resistance", "Effective or cross resistance");
    graph_arg(resistance);
    resistance->add_option("--from", o.from);
    resistance->add_option("--to", o.to);
    resistance->add_option("--edge", o.edge, "Cross resistance of this edge");
    auto* measure = app.add_subcommand("measure", "Canonical measure, or admissible measure for a divisor");
    graph_arg(measure);
    divisor_arg(measure);
    auto* green = app.add_subcommand("green", "Green's function values at vertices");
    graph_arg(green);
    divisor_arg(green);
    green->add_option("--source", o.source);
    auto* epsilon = app.add_subcommand("epsilon", "Admissible constant by the Green's function solve");
    graph_arg(epsilon);
    divisor_arg(epsilon);
    auto* epsilon_closed = app.add_subcommand("epsilon-closed", "Admissible constant by the closed form");
    graph_arg(epsilon_closed);
    divisor_arg(epsilon_closed);
    auto* lpoly = app.add_subcommand("lpoly", "The polynomial L");
    auto* mpoly = app.add_subcommand("mpoly", "The polynomial M");
    for (auto* s : {lpoly, mpoly}) {
        graph_arg(s);
        s->add_option("--strategy", o.strategy)->check(CLI::IsMember({"definition", "symmetric"}));
    }
    auto* classify_edges = app.add_subcommand("classify-edges", "Edge classes, kinds and size");
    graph_arg(classify_edges);
    auto* classify_nodes = app.add_subcommand("classify-nodes", "Node types and invariant counts of a fiber");
    graph_arg(classify_nodes);
    auto* bound = app.add_subcommand("bound", "The lower bound r0 from invariant counts");
    bound->add_option("--genus", o.genus);
    bound->add_option("--xi0", o.xi0);
    bound->add_option("--xi", o.xi, "j=count, repeatable");
    bound->add_option("--delta", o.delta, "i=count, repeatable");
    bound->add_option("--fiber", o.fiber, "Take the counts from a fiber document");
    bound->add_flag("--report", o.report, "Include the per-term breakdown");
    auto* compare = app.add_subcommand("compare", "Closed form against the Green's function solve");
    graph_arg(compare);
    divisor_arg(compare);
    auto* gen = app.add_subcommand("gen", "Emit a random hyperelliptic graph or fiber document");
    gen->add_option("--seed", o.seed);
    gen->add_option("--min-size", o.min_size);
    gen->add_option("--max-size", o.max_size);
    gen->add_flag("--fiber", o.gen_fiber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        error_json(err, "usage", e.what());
        return exit_usage;
    }

    int code = exit_ok;
    try {
        Json result;
        if (validate->parsed()) result = cmd_validate(o, code);
        else if (resistance->parsed()) result = cmd_resistance(o);
        else if (measure->parsed()) result = cmd_measure(o);
        else if (green->parsed()) result = cmd_green(o);
        else if (epsilon->parsed()) result = cmd_epsilon(o);
        else if (epsilon_closed->parsed()) result = cmd_epsilon_closed(o);
        else if (lpoly->parsed()) result = cmd_poly(o, true);
        else if (mpoly->parsed()) result = cmd_poly(o, false);
        else if (classify_edges->parsed()) result = cmd_classify_edges(o);
        else if (classify_nodes->parsed()) result = cmd_classify_nodes(o);
        else if (bound->parsed()) result = cmd_bound(o);
        else if (compare->parsed()) result = cmd_compare(o, code);
        else if (gen->parsed()) result = cmd_gen(o);
        out << result.dump(2) << "\n";
        return code;
    } catch (const UsageError& e) {
        error_json(err, e.code, e.message);
        return exit_usage;
    } catch (const DocumentError& e) {
        Json issues = Json::array();
        for (const auto& i : e.issues())
            issues.push_back({{"path", i.path}, {"code", error_code_name(i.code)}, {"message", i.message}});
        error_json(err, std::string(error_code_name(e.code())), e.what(), issues);
        return exit_domain;
    } catch (const Error& e) {
        error_json(err, std::string(error_code_name(e.code())), e.what());
        return exit_domain;
    }
}

}  // namespace admgraph::cli
