#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "admgraph/io.hpp"
#include "admgraph/testkit.hpp"
#include "cli.hpp"

using namespace admgraph;

namespace {

const std::string samples = SAMPLES_DIR;

struct Run {
    int code;
    Json out;
    Json err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    Run r{code, nullptr, nullptr};
    if (!out.str().empty() && out.str().front() == '{') r.out = Json::parse(out.str());
    if (!err.str().empty()) r.err = Json::parse(err.str());
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = std::string(BINARY_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

ErrorCode parse_code(const std::string& text) {
    try {
        parse_graph_document(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("document parsed");
    return ErrorCode::SchemaError;
}

std::string first_path(const std::string& text) {
    try {
        parse_graph_document(text);
    } catch (const DocumentError& e) {
        return e.issues().front().path;
    }
    return "";
}

bool has_float(const Json& j) {
    if (j.is_number_float()) return true;
    if (j.is_structured())
        for (const auto& item : j)
            if (has_float(item)) return true;
    return false;
}

}  // namespace

TEST_CASE("minimal document parses") {
    auto doc = parse_graph_document(R"({"vertices":[{"id":"P"},{"id":"Q"}],
        "edges":[{"id":"a","ends":["P","Q"],"length":"1"},{"id":"b","ends":["P","Q"],"length":"1"}]})");
    CHECK(doc.graph.vertex_count() == 2);
    CHECK(doc.graph.edge_count() == 2);
    CHECK_FALSE(doc.involution.has_value());
    CHECK_FALSE(doc.divisor.has_value());
}

TEST_CASE("schema errors carry paths") {
    const std::string dangling = R"({"vertices":[{"id":"P"}],"edges":[{"id":"a","ends":["P","P"]},{"id":"b","ends":["P","Z"]}]})";
    CHECK(parse_code(dangling) == ErrorCode::UnknownVertex);
    CHECK(first_path(dangling) == "edges[1].ends");

    const std::string zero_den = R"({"vertices":[{"id":"P"},{"id":"Q"}],"edges":[{"id":"a","ends":["P","Q"],"length":"3/0"}]})";
    CHECK(parse_code(zero_den) == ErrorCode::BadRational);
    CHECK(first_path(zero_den) == "edges[0].length");
    CHECK(parse_code(R"({"vertices":[{"id":"P"},{"id":"Q"}],"edges":[{"id":"a","ends":["P","Q"],"length":1.5}]})") ==
          ErrorCode::BadRational);
    CHECK(parse_code(R"({"vertices":[{"id":"P"},{"id":"Q"}],"edges":[{"id":"a","ends":["P","Q"],"length":"-1"}]})") ==
          ErrorCode::NonpositiveLength);
    CHECK(parse_code(R"({"vertices":[{"id":"P"},{"id":"P"}],"edges":[]})") == ErrorCode::DuplicateId);
    CHECK(parse_code(R"({"vertices":[{"id":"P"}],"edges":[],"divisor":{"Q":"1"}})") == ErrorCode::UnknownVertex);
    CHECK(parse_code(R"({"vertices":[{"id":"P"}],"edges":[],"involution":{"edges":{"x":"y"}}})") == ErrorCode::UnknownEdge);
    CHECK(parse_code(R"({"vertices":[{"id":"P","genus":-1}],"edges":[]})") == ErrorCode::SchemaError);
    CHECK(parse_code(R"({"vertices":[],"edges":[],"colour":1})") == ErrorCode::SchemaError);
    CHECK(parse_code("{\"vertices\": [") == ErrorCode::MalformedJson);
}

TEST_CASE("canonical documents round-trip byte for byte") {
    const std::string text = read_file(samples + "/sg.json");
    CHECK(serialize_graph_document(parse_graph_document(text)) == text);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto h = random_hyperelliptic(seed);
        const std::string once = serialize_graph_document(document_from(h, random_polarization(h, seed)));
        CHECK(serialize_graph_document(parse_graph_document(once)) == once);
        const std::string fiber = serialize_graph_document(document_from(random_fiber(seed)));
        CHECK(serialize_graph_document(parse_graph_document(fiber)) == fiber);
    }
}

TEST_CASE("documents convert to hyperelliptic graphs and fibers") {
    auto doc = parse_graph_document(read_file(samples + "/sg.json"));
    auto h = hyperelliptic_from(doc);
    CHECK(is_simple(h));
    auto cfg = random_fiber(4);
    auto back = fiber_from(parse_graph_document(serialize_graph_document(document_from(cfg))));
    CHECK(back.g == cfg.g);
    CHECK(count_invariants(back) == count_invariants(cfg));
}

TEST_CASE("cli examples") {
    auto e = run({"epsilon", samples + "/sg.json"});
    CHECK(e.code == 0);
    CHECK(e.out == Json{{"epsilon", "7/12"}, {"c", "5/32"}});

    auto b = run({"bound", "--genus", "3", "--xi0", "1"});
    CHECK(b.code == 0);
    CHECK(b.out == Json{{"r0", "1/63"}});
    CHECK(run({"bound", "--genus", "5", "--xi", "1=1"}).out["r0"] == "64/165");

    auto missing = run({"epsilon", "missing.json"});
    CHECK(missing.code == 2);
    CHECK(missing.err["error"]["code"] == "file_not_found");
}

TEST_CASE("cli subcommands") {
    const std::string sg = samples + "/sg.json";
    CHECK(run({"validate", sg}).out["valid"] == true);
    CHECK(run({"resistance", sg, "--from", "P", "--to", "Q"}).out["resistance"] == "1/2");
    CHECK(run({"resistance", sg, "--edge", "e"}).out["cross_resistance"] == "1");
    auto admissible = run({"measure", sg});
    CHECK(admissible.out["measure"] == "admissible");
    CHECK(admissible.out["value"]["densities"]["e"] == "1/4");
    const auto bare = write_temp("bare.json", R"({"vertices":[{"id":"P"},{"id":"Q"}],
        "edges":[{"id":"a","ends":["P","Q"]},{"id":"b","ends":["P","Q"]}]})");
    auto canonical = run({"measure", bare});
    CHECK(canonical.out["measure"] == "canonical");
    CHECK(canonical.out["value"]["densities"]["a"] == "1/2");
    CHECK(canonical.out["value"]["total"] == "1");
    CHECK(run({"measure", sg, "--divisor", R"({"P":"1","Q":"1"})"}).out["value"]["masses"]["P"] == "1/4");
    auto g = run({"green", sg, "--source", "P"});
    CHECK(g.out["green"]["P"]["P"] == "13/96");
    CHECK(g.out["green"]["P"]["Q"] == "-11/96");
    CHECK(run({"epsilon-closed", sg}).out["epsilon"] == "7/12");
    CHECK(run({"lpoly", sg, "--strategy", "symmetric"}).out["polynomial"]["text"] == "e");
    CHECK(run({"mpoly", sg}).out["polynomial"]["terms"].empty());
    auto edges = run({"classify-edges", sg});
    CHECK(edges.out["classes"][0]["kind"] == "two-jointed");
    CHECK(edges.out["size"] == 1);
    CHECK(run({"compare", sg}).out["agree"] == true);
    CHECK(run({"epsilon", sg, "--divisor", R"({"P":"-3","Q":"1"})"}).err["error"]["code"] == "degree_minus_two");

    auto report = run({"bound", "--genus", "5", "--xi", "1=2", "--delta", "1=1", "--report"});
    CHECK(report.out["radicand"] == report.out["r0"]);
    CHECK(report.out["terms"].size() == 5);
    CHECK(run({"bound", "--genus", "2", "--xi0", "1"}).err["error"]["code"] == "genus_below_three");
    CHECK(run({"bound", "--genus", "3", "--xi", "7=1"}).code == 2);
}

TEST_CASE("generated documents feed the other commands") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        std::ostringstream out, err;
        REQUIRE(cli::run_command({"gen", "--seed", std::to_string(seed)}, out, err) == 0);
        const auto path = write_temp("gen_" + std::to_string(seed) + ".json", out.str());
        auto c = run({"compare", path});
        CHECK(c.code == 0);
        CHECK(c.out["agree"] == true);
        CHECK_FALSE(has_float(c.out));

        std::ostringstream fout, ferr;
        REQUIRE(cli::run_command({"gen", "--fiber", "--seed", std::to_string(seed)}, fout, ferr) == 0);
        const auto fpath = write_temp("fiber_" + std::to_string(seed) + ".json", fout.str());
        auto nodes = run({"classify-nodes", fpath});
        CHECK(nodes.code == 0);
        CHECK(run({"bound", "--fiber", fpath}).code == 0);
        CHECK(run({"validate", fpath}).out["fiber"]["valid"] == true);
    }
}

TEST_CASE("usage and domain exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"lpoly", samples + "/sg.json", "--strategy", "guess"}).code == 2);
    CHECK(run({"epsilon"}).code == 2);
    const auto bad = write_temp("bad.json", R"({"vertices":[{"id":"P"}],"edges":[{"id":"a","ends":["P","Z"]}]})");
    auto r = run({"epsilon", bad});
    CHECK(r.code == 1);
    CHECK(r.err["error"]["issues"][0]["path"] == "edges[0].ends");
    const auto broken = write_temp("broken.json", "{");
    CHECK(run({"epsilon", broken}).err["error"]["code"] == "malformed_json");
}

TEST_CASE("enumeration cap from the environment") {
    std::ostringstream out, err;
    REQUIRE(cli::run_command({"gen", "--seed", "3"}, out, err) == 0);
    const auto path = write_temp("cap.json", out.str());
    setenv("ADMGRAPH_MAX_CLASSES", "2", 1);
    auto capped = run({"lpoly", path});
    unsetenv("ADMGRAPH_MAX_CLASSES");
    CHECK(capped.code == 1);
    CHECK(capped.err["error"]["code"] == "enumeration_cap");
    CHECK(run({"lpoly", path}).code == 0);
    CHECK(run({"--max-classes", "2", "lpoly", path}).code == 1);
}
