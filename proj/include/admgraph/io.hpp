#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "admgraph/bogomolov.hpp"
#include "admgraph/error.hpp"
#include "admgraph/graph.hpp"
#include "admgraph/hyperelliptic.hpp"
#include "admgraph/polynomial.hpp"

namespace admgraph {

using Json = nlohmann::ordered_json;

/// Graph, fiber or hyperelliptic graph as read from JSON.
struct GraphDocument {
    MetrizedGraph graph;
    std::map<VertexId, int> genus;  ///< only vertices that carried a "genus" field
    std::optional<Involution> involution;
    std::optional<Divisor> divisor;
};

struct SchemaIssue {
    std::string path;  ///< e.g. "edges[2].ends"
    ErrorCode code;
    std::string message;
};

/// Parse failure carrying every issue found; code() is the code of the first issue.
class DocumentError : public Error {
public:
    explicit DocumentError(std::vector<SchemaIssue> issues);
    const std::vector<SchemaIssue>& issues() const { return issues_; }

private:
    std::vector<SchemaIssue> issues_;
};

/// Throws Error(MalformedJson) on bad JSON and DocumentError on schema problems.
GraphDocument parse_graph_document(std::string_view text);
GraphDocument graph_document_from_json(const Json& j);

Json to_json(const GraphDocument& doc);
/// Canonical text: two-space indentation and a trailing newline.
std::string serialize_graph_document(const GraphDocument& doc);

GraphDocument document_from(const HyperellipticGraph& h, const std::optional<Divisor>& d = std::nullopt);
GraphDocument document_from(const FiberConfiguration& cfg);

/// Requires an involution; validates the axioms.
HyperellipticGraph hyperelliptic_from(const GraphDocument& doc);
/// Fiber genus is the sum of component genera plus the Betti number.
FiberConfiguration fiber_from(const GraphDocument& doc);

/// Divisor given as an object of id -> rational string.
Divisor divisor_from_json(const Json& j, const std::string& path = "divisor");
Json to_json(const Divisor& d);

/// {"text": ..., "terms": [{"monomial": [...], "coefficient": ...}, ...]} in monomial order.
Json to_json(const MultiPoly& p);
Json to_json(const RationalFn& f);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace admgraph
