#include "widthlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "widthlab/canonical.hpp"

namespace widthlab {

namespace {

[[noreturn]] void parse_fail(const std::string &source, int line, const std::string &message) {
    raise(Errc::parse_error, source + ":" + std::to_string(line) + ": " + message);
}

Instance parse_dimacs(std::istream &in, const std::string &source) {
    int n = -1, declared_edges = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> declared_edges) || kind != "edge")
                parse_fail(source, line_no, "expected 'p edge <n> <m>'");
            if (n < 0 || declared_edges < 0) parse_fail(source, line_no, "negative sizes");
            continue;
        }
        if (tag == "e") {
            if (n < 0) parse_fail(source, line_no, "edge before 'p edge' header");
            long long u, v;
            if (!(ls >> u >> v)) parse_fail(source, line_no, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n)
                parse_fail(source, line_no, "vertex out of range (vertices are 1.." +
                                                std::to_string(n) + ")");
            if (u == v) parse_fail(source, line_no, "self-loop");
            Vertex a = static_cast<Vertex>(u - 1), b = static_cast<Vertex>(v - 1);
            edges.emplace_back(std::min(a, b), std::max(a, b));
            continue;
        }
        parse_fail(source, line_no, "unrecognized line tag '" + tag + "'");
    }
    if (n < 0) parse_fail(source, line_no, "missing 'p edge' header");
    if (declared_edges != static_cast<int>(edges.size()))
        parse_fail(source, line_no,
                   "header declares " + std::to_string(declared_edges) + " edges, found " +
                       std::to_string(edges.size()));
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        parse_fail(source, line_no, "duplicate edge");
    return Instance{PrecoloredGraph(Graph(n, edges)), false};
}

Instance parse_json(std::istream &in, const std::string &source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        raise(Errc::parse_error, source + ": " + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
            raise(Errc::parse_error, source + ": instance needs 'n' and 'edges'");
        int n = doc.at("n").get<int>();
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto &e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                raise(Errc::parse_error, source + ": each edge is a [u, v] pair");
            int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n)
                raise(Errc::parse_error, source + ": edge endpoint out of range");
            if (u == v) raise(Errc::parse_error, source + ": self-loop");
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            raise(Errc::parse_error, source + ": duplicate edge");
        std::vector<Color> colors(n, kUncolored);
        bool has_colors = doc.contains("colors");
        if (has_colors) {
            for (const auto &[key, value] : doc.at("colors").items()) {
                int v = -1;
                try {
                    v = std::stoi(key);
                } catch (...) {
                    raise(Errc::parse_error, source + ": colour key '" + key + "' is not a vertex");
                }
                if (v < 0 || v >= n)
                    raise(Errc::parse_error, source + ": coloured vertex out of range");
                int c = value.get<int>();
                if (c < 0 || c >= kNumColors)
                    raise(Errc::parse_error, source + ": colour must be 0, 1 or 2");
                colors[v] = c;
            }
        }
        return Instance{PrecoloredGraph(Graph(n, edges), std::move(colors)), has_colors};
    } catch (const nlohmann::json::exception &e) {
        raise(Errc::parse_error, source + ": " + e.what());
    }
}

} // namespace

Instance parse_instance(std::istream &in, InstanceFormat format, const std::string &source) {
    return format == InstanceFormat::dimacs ? parse_dimacs(in, source) : parse_json(in, source);
}

Instance parse_instance(const std::string &text, InstanceFormat format, const std::string &source) {
    std::istringstream in(text);
    return parse_instance(in, format, source);
}

Instance load_instance(const std::filesystem::path &path, std::optional<InstanceFormat> format) {
    InstanceFormat fmt;
    if (format) {
        fmt = *format;
    } else {
        auto ext = path.extension().string();
        if (ext == ".json") fmt = InstanceFormat::json;
        else if (ext == ".col" || ext == ".dimacs" || ext == ".edge") fmt = InstanceFormat::dimacs;
        else raise(Errc::parse_error, path.string() + ": unknown extension; pass --format");
    }
    std::ifstream in(path);
    if (!in) raise(Errc::parse_error, path.string() + ": cannot open");
    return parse_instance(in, fmt, path.filename().string());
}

std::string serialize_dimacs(const Graph &g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string serialize_instance_json(const PrecoloredGraph &p) {
    nlohmann::json doc;
    doc["n"] = p.graph.vertex_count();
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : p.graph.edges()) doc["edges"].push_back({u, v});
    if (p.colored_count() > 0) {
        nlohmann::json colors = nlohmann::json::object();
        for (Vertex v = 0; v < p.graph.vertex_count(); ++v)
            if (p.colors[v] != kUncolored) colors[std::to_string(v)] = p.colors[v];
        doc["colors"] = std::move(colors);
    }
    return doc.dump();
}

std::string digest_hex(std::string_view bytes) {
    // Two independent 64-bit FNV-1a lanes, rendered as 32 hex chars.
    std::uint64_t h1 = 0xcbf29ce484222325ULL, h2 = 0x84222325cbf29ce4ULL;
    for (unsigned char c : bytes) {
        h1 = (h1 ^ c) * 0x100000001b3ULL;
        h2 = (h2 ^ (c + 0x9e)) * 0x100000001b3ULL;
    }
    static const char digits[] = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 0; i < 16; ++i) out[i] = digits[(h1 >> (60 - 4 * i)) & 15];
    for (int i = 0; i < 16; ++i) out[16 + i] = digits[(h2 >> (60 - 4 * i)) & 15];
    return out;
}

std::string instance_digest(const PrecoloredGraph &p, const Budget &budget) {
    if (p.graph.vertex_count() <= budget.canonical_max_n)
        return digest_hex(canonical_form(p, budget).bytes);
    return digest_hex(serialize_instance_json(p));
}

} // namespace widthlab
