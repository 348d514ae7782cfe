#include "admgraph/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace admgraph {

namespace {

std::string first_message(const std::vector<SchemaIssue>& issues) {
    if (issues.empty()) return "invalid document";
    std::string out = issues.front().path + ": " + issues.front().message;
    if (issues.size() > 1) out += " (and " + std::to_string(issues.size() - 1) + " more)";
    return out;
}

ErrorCode first_code(const std::vector<SchemaIssue>& issues) {
    return issues.empty() ? ErrorCode::SchemaError : issues.front().code;
}

class IssueList {
public:
    void add(std::string path, ErrorCode code, std::string message) {
        issues_.push_back({std::move(path), code, std::move(message)});
    }
    void schema(std::string path, std::string message) { add(std::move(path), ErrorCode::SchemaError, std::move(message)); }
    bool empty() const { return issues_.empty(); }
    [[noreturn]] void raise() { throw DocumentError(std::move(issues_)); }

    std::optional<Rational> rational(const Json& j, const std::string& path) {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (!j.is_string()) {
            add(path, ErrorCode::BadRational, "expected a rational string such as \"3/2\"");
            return std::nullopt;
        }
        auto r = try_parse_rational(j.get<std::string>());
        if (!r) add(path, ErrorCode::BadRational, "bad rational literal \"" + j.get<std::string>() + "\"");
        return r;
    }

    std::optional<std::string> id(const Json& j, const std::string& path) {
        if (!j.is_string() || j.get<std::string>().empty()) {
            schema(path, "expected a nonempty string id");
            return std::nullopt;
        }
        return j.get<std::string>();
    }

private:
    std::vector<SchemaIssue> issues_;
};

std::string index_path(const std::string& base, std::size_t k) { return base + "[" + std::to_string(k) + "]"; }

std::map<std::string, std::string> read_id_map(const Json& j, const std::string& path, const std::set<std::string>& known,
                                               ErrorCode unknown_code, IssueList& issues) {
    std::map<std::string, std::string> out;
    if (!j.is_object()) {
        issues.schema(path, "expected an object");
        return out;
    }
    for (const auto& [key, value] : j.items()) {
        const std::string p = path + "." + key;
        if (!known.count(key)) issues.add(p, unknown_code, "unknown id \"" + key + "\"");
        auto target = issues.id(value, p);
        if (!target) continue;
        if (!known.count(*target)) {
            issues.add(p, unknown_code, "unknown id \"" + *target + "\"");
            continue;
        }
        out[key] = *target;
    }
    return out;
}

}  // namespace

DocumentError::DocumentError(std::vector<SchemaIssue> issues)
    : Error(first_code(issues), first_message(issues)), issues_(std::move(issues)) {}

GraphDocument parse_graph_document(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedJson, e.what());
    }
    return graph_document_from_json(j);
}

Divisor divisor_from_json(const Json& j, const std::string& path) {
    IssueList issues;
    std::map<VertexId, Rational> coefficients;
    if (!j.is_object()) {
        issues.schema(path, "expected an object of vertex id to rational");
    } else {
        for (const auto& [key, value] : j.items())
            if (auto r = issues.rational(value, path + "." + key)) coefficients[key] = *r;
    }
    if (!issues.empty()) issues.raise();
    return Divisor(coefficients);
}

GraphDocument graph_document_from_json(const Json& j) {
    IssueList issues;
    if (!j.is_object()) {
        issues.schema("", "expected a JSON object");
        issues.raise();
    }
    for (const auto& [key, value] : j.items())
        if (key != "vertices" && key != "edges" && key != "involution" && key != "divisor")
            issues.schema(key, "unknown field");

    std::vector<VertexId> vertices;
    std::set<VertexId> vertex_set;
    std::map<VertexId, int> genus;
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        issues.schema("vertices", "expected an array");
    } else {
        const auto& vs = j["vertices"];
        for (std::size_t k = 0; k < vs.size(); ++k) {
            const std::string p = index_path("vertices", k);
            const Json& v = vs[k];
            if (!v.is_object()) {
                issues.schema(p, "expected an object");
                continue;
            }
            for (const auto& [key, value] : v.items())
                if (key != "id" && key != "genus") issues.schema(p + "." + key, "unknown field");
            auto id = v.contains("id") ? issues.id(v["id"], p + ".id") : std::nullopt;
            if (!v.contains("id")) issues.schema(p + ".id", "missing");
            if (!id) continue;
            if (!vertex_set.insert(*id).second) {
                issues.add(p + ".id", ErrorCode::DuplicateId, "duplicate vertex id \"" + *id + "\"");
                continue;
            }
            vertices.push_back(*id);
            if (v.contains("genus")) {
                const Json& gj = v["genus"];
                if (!gj.is_number_integer() || gj.get<long>() < 0)
                    issues.schema(p + ".genus", "expected a nonnegative integer");
                else
                    genus[*id] = gj.get<int>();
            }
        }
    }

    std::vector<Edge> edges;
    std::set<EdgeId> edge_set;
    if (!j.contains("edges") || !j["edges"].is_array()) {
        issues.schema("edges", "expected an array");
    } else {
        const auto& es = j["edges"];
        for (std::size_t k = 0; k < es.size(); ++k) {
            const std::string p = index_path("edges", k);
            const Json& e = es[k];
            if (!e.is_object()) {
                issues.schema(p, "expected an object");
                continue;
            }
            for (const auto& [key, value] : e.items())
                if (key != "id" && key != "ends" && key != "length") issues.schema(p + "." + key, "unknown field");
            if (!e.contains("id")) issues.schema(p + ".id", "missing");
            auto id = e.contains("id") ? issues.id(e["id"], p + ".id") : std::nullopt;
            bool ok = id.has_value();
            if (id && !edge_set.insert(*id).second) {
                issues.add(p + ".id", ErrorCode::DuplicateId, "duplicate edge id \"" + *id + "\"");
                ok = false;
            }
            VertexId ends[2];
            if (!e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2) {
                issues.schema(p + ".ends", "expected two vertex ids");
                ok = false;
            } else {
                for (int s = 0; s < 2; ++s) {
                    auto v = issues.id(e["ends"][s], p + ".ends");
                    if (!v) {
                        ok = false;
                    } else if (!vertex_set.count(*v)) {
                        issues.add(p + ".ends", ErrorCode::UnknownVertex, "unknown vertex \"" + *v + "\"");
                        ok = false;
                    } else {
                        ends[s] = *v;
                    }
                }
            }
            Rational length(1);
            if (e.contains("length")) {
                auto r = issues.rational(e["length"], p + ".length");
                if (!r) {
                    ok = false;
                } else if (r->sign() <= 0) {
                    issues.add(p + ".length", ErrorCode::NonpositiveLength, "length must be positive");
                    ok = false;
                } else {
                    length = *r;
                }
            }
            if (ok) edges.push_back(Edge{*id, ends[0], ends[1], length});
        }
    }

    GraphDocument doc;
    if (j.contains("involution")) {
        const Json& inv = j["involution"];
        Involution i;
        if (!inv.is_object()) {
            issues.schema("involution", "expected an object");
        } else {
            for (const auto& [key, value] : inv.items())
                if (key != "vertices" && key != "edges") issues.schema("involution." + key, "unknown field");
            if (inv.contains("vertices"))
                i.vertex_map = read_id_map(inv["vertices"], "involution.vertices", vertex_set, ErrorCode::UnknownVertex,
                                           issues);
            if (inv.contains("edges"))
                i.edge_map = read_id_map(inv["edges"], "involution.edges", edge_set, ErrorCode::UnknownEdge, issues);
        }
        doc.involution = i;
    }
    if (j.contains("divisor")) {
        const Json& dj = j["divisor"];
        std::map<VertexId, Rational> coefficients;
        if (!dj.is_object()) {
            issues.schema("divisor", "expected an object");
        } else {
            for (const auto& [key, value] : dj.items()) {
                const std::string p = "divisor." + key;
                if (!vertex_set.count(key)) issues.add(p, ErrorCode::UnknownVertex, "unknown vertex \"" + key + "\"");
                if (auto r = issues.rational(value, p)) coefficients[key] = *r;
            }
        }
        doc.divisor = Divisor(coefficients);
    }
    if (!issues.empty()) issues.raise();

    doc.graph = MetrizedGraph(vertices, edges);
    doc.genus = genus;
    return doc;
}

Json to_json(const Divisor& d) {
    Json out = Json::object();
    for (const auto& [v, a] : d.coefficients()) out[v] = a.to_string();
    return out;
}

Json to_json(const GraphDocument& doc) {
    Json out = Json::object();
    Json vs = Json::array();
    for (const auto& v : doc.graph.vertices()) {
        Json entry = {{"id", v}};
        if (auto it = doc.genus.find(v); it != doc.genus.end()) entry["genus"] = it->second;
        vs.push_back(entry);
    }
    out["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : doc.graph.edges())
        es.push_back({{"id", e.id}, {"ends", {e.u, e.v}}, {"length", e.length.to_string()}});
    out["edges"] = es;
    if (doc.involution) {
        Json vm = Json::object(), em = Json::object();
        for (const auto& [a, b] : doc.involution->vertex_map) vm[a] = b;
        for (const auto& [a, b] : doc.involution->edge_map) em[a] = b;
        out["involution"] = {{"vertices", vm}, {"edges", em}};
    }
    if (doc.divisor) out["divisor"] = to_json(*doc.divisor);
    return out;
}

std::string serialize_graph_document(const GraphDocument& doc) { return to_json(doc).dump(2) + "\n"; }

GraphDocument document_from(const HyperellipticGraph& h, const std::optional<Divisor>& d) {
    GraphDocument doc;
    doc.graph = h.graph();
    Involution full;
    for (const auto& v : h.graph().vertices())
        if (h.involution().vertex(v) != v) full.vertex_map[v] = h.involution().vertex(v);
    for (const auto& e : h.graph().edges())
        if (h.involution().edge(e.id) != e.id) full.edge_map[e.id] = h.involution().edge(e.id);
    doc.involution = full;
    doc.divisor = d;
    return doc;
}

GraphDocument document_from(const FiberConfiguration& cfg) {
    GraphDocument doc;
    doc.graph = cfg.dual;
    for (const auto& v : cfg.dual.vertices()) doc.genus[v] = cfg.genus_of(v);
    doc.involution = cfg.involution;
    return doc;
}

HyperellipticGraph hyperelliptic_from(const GraphDocument& doc) {
    if (!doc.involution) throw Error(ErrorCode::MissingInvolution, "document has no involution");
    return validate_hyperelliptic(doc.graph, *doc.involution);
}

FiberConfiguration fiber_from(const GraphDocument& doc) {
    FiberConfiguration cfg;
    cfg.dual = doc.graph;
    cfg.genus = doc.genus;
    cfg.involution = doc.involution;
    long total = doc.graph.betti_number();
    for (const auto& [v, k] : doc.genus) total += k;
    cfg.g = static_cast<int>(total);
    validate_fiber(cfg);
    return cfg;
}

Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"monomial", m}, {"coefficient", c.to_string()}});
    return {{"text", p.to_string()}, {"terms", terms}};
}

Json to_json(const RationalFn& f) { return {{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}}; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace admgraph
