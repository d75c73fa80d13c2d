#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "widthlab/cache.hpp"
#include "widthlab/canonical.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/io.hpp"

using namespace widthlab;
using json = nlohmann::json;

namespace {

namespace fs = std::filesystem;

// The CLI binary sits next to the test tree.
fs::path cli_path() {
#ifdef WIDTHLAB_CLI_PATH
    return fs::path(WIDTHLAB_CLI_PATH);
#else
    return fs::path("widthlab");
#endif
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string &args, const std::string &stdin_text = "") {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "widthlab-cli-tests";
    fs::create_directories(dir);
    fs::path out_file = dir / ("out" + std::to_string(counter) + ".txt");
    fs::path in_file = dir / ("in" + std::to_string(counter) + ".txt");
    ++counter;
    {
        std::ofstream in(in_file);
        in << stdin_text;
    }
    std::string command = cli_path().string() + " " + args + " < " + in_file.string() + " > " +
                          out_file.string() + " 2>/dev/null";
    int status = std::system(command.c_str());
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buf.str()};
}

fs::path write_temp(const std::string &name, const std::string &text) {
    fs::path dir = fs::temp_directory_path() / "widthlab-cli-tests";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream out(p);
    out << text;
    return p;
}

// Minimal draft-07 subset validator: type / required / properties / pattern /
// additionalProperties, which is everything the shipped schema uses.
bool schema_valid(const json &schema, const json &value, std::string *why = nullptr) {
    auto fail = [&](const std::string &msg) {
        if (why) *why = msg;
        return false;
    };
    if (schema.contains("type")) {
        const std::string type = schema.at("type");
        if (type == "object" && !value.is_object()) return fail("expected object");
        if (type == "string" && !value.is_string()) return fail("expected string");
        if (type == "integer" && !value.is_number_integer()) return fail("expected integer");
        if (type == "array" && !value.is_array()) return fail("expected array");
    }
    if (schema.contains("pattern") && value.is_string()) {
        // The only pattern in use is ^[0-9a-f]{32}$.
        const std::string &s = value.get_ref<const std::string &>();
        if (schema.at("pattern") == "^[0-9a-f]{32}$") {
            if (s.size() != 32) return fail("digest length");
            for (char c : s)
                if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')))
                    return fail("digest charset");
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto &key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    return fail("missing required key " + key.get<std::string>());
        const json *props = schema.contains("properties") ? &schema.at("properties") : nullptr;
        for (const auto &[key, sub] : value.items()) {
            if (props && props->contains(key)) {
                if (!schema_valid(props->at(key), sub, why)) return false;
            } else if (schema.contains("additionalProperties") &&
                       schema.at("additionalProperties") == false) {
                return fail("unexpected key " + key);
            }
        }
    }
    return true;
}

json report_schema() {
    std::ifstream in(fs::path(WIDTHLAB_SCHEMA_PATH));
    REQUIRE(in.good());
    return json::parse(in);
}

} // namespace

TEST_CASE("dimacs parsing: examples and errors") {
    Instance k3 = parse_instance("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", InstanceFormat::dimacs, "t");
    CHECK(k3.precolored.graph.vertex_count() == 3);
    CHECK(k3.precolored.graph.edge_count() == 3);
    CHECK_FALSE(k3.has_colors);

    CHECK_THROWS_AS(parse_instance("p edge 3 1\ne 1 4\n", InstanceFormat::dimacs, "t"), Error);
    CHECK_THROWS_AS(parse_instance("e 1 2\n", InstanceFormat::dimacs, "t"), Error);
    CHECK_THROWS_AS(parse_instance("p edge 3 2\ne 1 2\n", InstanceFormat::dimacs, "t"), Error);
    CHECK_THROWS_AS(parse_instance("p edge 3 2\ne 1 2\ne 2 1\n", InstanceFormat::dimacs, "t"),
                    Error);

    // Error messages carry the source and line.
    try {
        parse_instance("p edge 3 3\ne 1 4\n", InstanceFormat::dimacs, "bad.col");
        CHECK(false);
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("bad.col:2") != std::string::npos);
    }
}

TEST_CASE("json instance parsing: colours and errors") {
    Instance mono =
        parse_instance(R"({"n":2, "edges":[[0,1]], "colors":{"0":0, "1":0}})",
                       InstanceFormat::json, "t");
    CHECK(mono.has_colors);
    CHECK(mono.precolored.colors[0] == 0);
    CHECK(mono.precolored.colors[1] == 0);
    CHECK(mono.precolored.has_monochromatic_edge());

    CHECK_THROWS_AS(parse_instance(R"({"n":2, "edges":[[0,2]]})", InstanceFormat::json, "t"),
                    Error);
    CHECK_THROWS_AS(parse_instance(R"({"n":2, "edges":[[0,1]], "colors":{"0":7}})",
                                   InstanceFormat::json, "t"),
                    Error);
    CHECK_THROWS_AS(parse_instance("{", InstanceFormat::json, "t"), Error);
}

TEST_CASE("instances round-trip through both formats") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) edges.emplace_back(i, j);
        Graph g(n, edges);
        std::vector<Color> colors(n, kUncolored);
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 4 == 0) colors[v] = static_cast<Color>(rng() % 3);
        PrecoloredGraph p(g, colors);

        Instance via_json =
            parse_instance(serialize_instance_json(p), InstanceFormat::json, "roundtrip");
        CHECK(via_json.precolored == p);

        Instance via_dimacs =
            parse_instance(serialize_dimacs(g), InstanceFormat::dimacs, "roundtrip");
        CHECK(via_dimacs.precolored.graph == g);
    }
}

TEST_CASE("instance digests are isomorphism-invariant at canonical sizes") {
    Graph c5 = standard_graph("cycle", 5);
    Graph c5_re(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(instance_digest(PrecoloredGraph(c5)) == instance_digest(PrecoloredGraph(c5_re)));
    CHECK(instance_digest(PrecoloredGraph(c5)) !=
          instance_digest(PrecoloredGraph(standard_graph("path", 5))));
}

TEST_CASE("result cache: store, hit, idempotence") {
    fs::path dir = fs::temp_directory_path() / "widthlab-cache-test";
    fs::remove_all(dir);
    ResultCache cache(dir);
    CHECK_FALSE(cache.get("deadbeef").has_value());
    cache.put("deadbeef", "{\"x\":1}");
    CHECK(cache.get("deadbeef") == std::string("{\"x\":1}"));
    cache.put("deadbeef", "{\"x\":1}");
    CHECK(cache.get("deadbeef") == std::string("{\"x\":1}"));
    fs::remove_all(dir);
}

TEST_CASE("cli: every subcommand emits schema-valid reports") {
    json schema = report_schema();
    fs::path k4 = write_temp("k4.col", serialize_dimacs(standard_graph("complete", 4)));
    fs::path c5 = write_temp("c5.col", serialize_dimacs(standard_graph("cycle", 5)));
    fs::path star = write_temp(
        "star.json",
        serialize_instance_json(PrecoloredGraph(Graph(4, {{0, 1}, {0, 2}, {0, 3}}),
                                                {kUncolored, 0, 1, 2})));

    std::vector<std::pair<std::string, int>> invocations = {
        {"width " + k4.string() + " --target k3 --no-cache", 0},
        {"width " + c5.string() + " --target k3 --no-cache", 3},
        {"consistency " + k4.string() + " --k 4 --no-cache", 0},
        {"game " + star.string() + " --k 4 --min-rounds --no-cache", 0},
        {"enumerate --k 2 --rounds 0 --nmax 3 --no-cache", 0},
        {"generate petersen --no-cache", 0},
        {"planarize " + k4.string() + " --no-cache", 0},
        {"verify " + k4.string() + " --no-cache", 0},
        {"survey --n 4 --no-cache", 0},
        {"play " + k4.string() + " --k 4 --self-play --no-cache", 0},
    };
    for (const auto &[args, expected] : invocations) {
        CAPTURE(args);
        RunResult res = run_cli(args);
        CHECK(res.exit_code == expected);
        json report = json::parse(res.out);
        std::string why;
        bool ok = schema_valid(schema, report, &why);
        CAPTURE(why);
        CHECK(ok);
    }
}

TEST_CASE("cli: width examples with exit codes") {
    fs::path k4 = write_temp("k4b.col", serialize_dimacs(standard_graph("complete", 4)));
    RunResult res = run_cli("width " + k4.string() + " --target k3 --no-cache");
    CHECK(res.exit_code == 0);
    json report = json::parse(res.out);
    CHECK(report["result"]["width"] == 4);
    CHECK(report["result"]["rounds"] == 4);
    CHECK(report["certificate"]["replay_verified"] == true);

    fs::path c5 = write_temp("c5b.col", serialize_dimacs(standard_graph("cycle", 5)));
    RunResult hom = run_cli("width " + c5.string() + " --target k3 --no-cache");
    CHECK(hom.exit_code == 3);
    json hom_report = json::parse(hom.out);
    CHECK(hom_report["result"]["refutable"] == false);
    CHECK(hom_report["result"]["homomorphism"].size() == 5);

    fs::path bad = write_temp("bad.col", "p edge 3 3\ne 1 4\n");
    CHECK(run_cli("width " + bad.string() + " --target k3 --no-cache").exit_code == 2);
}

TEST_CASE("cli: cache hits byte-identically reproduce the result payload") {
    fs::path dir = fs::temp_directory_path() / "widthlab-cli-cache";
    fs::remove_all(dir);
    fs::path k5 = write_temp("k5.col", serialize_dimacs(standard_graph("complete", 5)));
    std::string args = "width " + k5.string() + " --target k3 --cache-dir " + dir.string();
    json first = json::parse(run_cli(args).out);
    json second = json::parse(run_cli(args).out);
    CHECK(first["result"].dump() == second["result"].dump());
    CHECK(first["certificate"].dump() == second["certificate"].dump());
    // Isomorphic relabeling hits the same cache entry: digest is canonical.
    fs::path k5b = write_temp("k5b.col", "p edge 5 10\ne 5 4\ne 5 3\ne 5 2\ne 5 1\ne 4 3\n"
                                         "e 4 2\ne 4 1\ne 3 2\ne 3 1\ne 2 1\n");
    json third = json::parse(run_cli("width " + k5b.string() + " --target k3 --cache-dir " +
                                     dir.string())
                                 .out);
    CHECK(first["instance_digest"] == third["instance_digest"]);
    CHECK(first["result"].dump() == third["result"].dump());
    fs::remove_all(dir);
}

TEST_CASE("cli: determinism across reruns and worker counts") {
    RunResult a = run_cli("survey --n 5 --no-cache --workers 1");
    RunResult b = run_cli("survey --n 5 --no-cache --workers 4");
    json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["result"].dump() == jb["result"].dump());

    RunResult g1 = run_cli("generate random-regular 10 6 --seed 7 --raw --no-cache");
    RunResult g2 = run_cli("generate random-regular 10 6 --seed 7 --raw --no-cache");
    CHECK(g1.out == g2.out);

    RunResult p1 = run_cli("planarize " +
                           write_temp("k4c.col", serialize_dimacs(standard_graph("complete", 4)))
                               .string() +
                           " --seed 3 --no-cache");
    RunResult p2 = run_cli("planarize " +
                           write_temp("k4d.col", serialize_dimacs(standard_graph("complete", 4)))
                               .string() +
                           " --seed 3 --no-cache");
    CHECK(json::parse(p1.out)["result"].dump() == json::parse(p2.out)["result"].dump());
}

TEST_CASE("cli: interactive play transcripts") {
    fs::path star = write_temp(
        "star2.json",
        serialize_instance_json(PrecoloredGraph(Graph(4, {{0, 1}, {0, 2}, {0, 3}}),
                                                {kUncolored, 0, 1, 2})));
    // Spoiler demands the centre; any reply loses in one round.
    RunResult res = run_cli("play " + star.string() + " --k 4 --no-cache", "r\n");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("Spoiler selects vertex 0") != std::string::npos);
    CHECK(res.out.find("Spoiler wins after 1 round(s)") != std::string::npos);

    // K4 at k = 3: no Spoiler win, the tool offers the role swap.
    fs::path k4 = write_temp("k4e.col", serialize_dimacs(standard_graph("complete", 4)));
    RunResult no_win = run_cli("play " + k4.string() + " --k 3 --no-cache");
    CHECK(no_win.exit_code == 0);
    CHECK(no_win.out.find("no winning strategy") != std::string::npos);

    // EOF mid-session aborts cleanly with exit 0 and a partial transcript.
    RunResult eof = run_cli("play " + k4.string() + " --k 4 --no-cache", "r\n");
    CHECK(eof.exit_code == 0);
    CHECK(eof.out.find("session aborted") != std::string::npos);

    // Invalid input re-prompts rather than failing.
    RunResult retry = run_cli("play " + star.string() + " --k 4 --no-cache", "zz\nr\n");
    CHECK(retry.exit_code == 0);
    CHECK(retry.out.find("Please answer r, b or g") != std::string::npos);
    CHECK(retry.out.find("Spoiler wins") != std::string::npos);
}

TEST_CASE("cli: resource caps exit with code 4") {
    fs::path pet = write_temp("pet.col", serialize_dimacs(standard_graph("petersen")));
    RunResult res = run_cli("width " + pet.string() + " --target k3 --no-cache --budget-nodes 1");
    CHECK(res.exit_code == 4); // the one-node budget trips inside the hom search
    fs::path big = write_temp("big.col", serialize_dimacs(standard_graph("complete", 18)));
    RunResult cap = run_cli("width " + big.string() + " --target k3 --no-cache");
    CHECK(cap.exit_code == 4);
}
