// widthlab: exact width laboratory for graph H-colouring at desk scale.
//
// Subcommands: width | consistency | game | enumerate | generate | planarize
//              | verify | survey | play
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
//             4 resource cap.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "widthlab/bounds.hpp"
#include "widthlab/cache.hpp"
#include "widthlab/coloring_game.hpp"
#include "widthlab/consistency.hpp"
#include "widthlab/enumeration.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/homomorphism.hpp"
#include "widthlab/invariants.hpp"
#include "widthlab/io.hpp"
#include "widthlab/planarize.hpp"

using json = nlohmann::json;
using namespace widthlab;

namespace {

constexpr const char *kVersion = "0.1.0";

struct CliConfig {
    std::uint64_t seed = 1;
    int workers = 1;
    int max_k = 0;          // 0: solver default (|g|)
    int max_rounds = -1;    // -1: run to stabilisation
    std::uint64_t budget_nodes = 0; // 0: library default
    std::string format;     // "", "dimacs", "json"
    std::string out;
    std::string cache_dir = ".widthlab-cache";
    bool no_cache = false;

    Budget budget() const {
        Budget b;
        if (budget_nodes > 0) b.search_nodes = budget_nodes;
        return b;
    }
    json to_json() const {
        return json{{"seed", seed},           {"workers", workers},
                    {"max_k", max_k},         {"max_rounds", max_rounds},
                    {"budget_nodes", budget_nodes}, {"format", format},
                    {"cache_dir", no_cache ? "" : cache_dir}};
    }
};

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::parse_error: return 2;
    case Errc::resource_cap:
    case Errc::retry_exhausted: return 4;
    default: return 3;
    }
}

std::optional<InstanceFormat> parse_format(const std::string &name) {
    if (name.empty()) return std::nullopt;
    if (name == "dimacs" || name == "col") return InstanceFormat::dimacs;
    if (name == "json") return InstanceFormat::json;
    raise(Errc::bad_params, "unknown format '" + name + "' (dimacs|json)");
}

Instance load(const std::string &path, const CliConfig &config) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        auto fmt = parse_format(config.format);
        return parse_instance(buf.str(), fmt.value_or(InstanceFormat::dimacs), "<stdin>");
    }
    return load_instance(path, parse_format(config.format));
}

json instance_json(const PrecoloredGraph &p) { return json::parse(serialize_instance_json(p)); }

void emit(const std::string &text, const CliConfig &config) {
    if (config.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(config.out, std::ios::binary | std::ios::trunc);
        if (!out) raise(Errc::bad_params, "cannot open output file " + config.out);
        out << text << "\n";
    }
}

struct ReportTimer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit_report(const std::string &command, const std::string &digest, json result,
                 const ReportTimer &timer, const CliConfig &config,
                 std::optional<json> bounds = std::nullopt,
                 std::optional<json> certificate = std::nullopt) {
    json report{{"command", command},
                {"instance_digest", digest},
                {"result", std::move(result)},
                {"elapsed_ms", timer.elapsed_ms()},
                {"config", config.to_json()},
                {"version", kVersion}};
    if (bounds) report["bounds"] = std::move(*bounds);
    if (certificate) report["certificate"] = std::move(*certificate);
    emit(report.dump(2), config);
}

std::optional<ResultCache> open_cache(const CliConfig &config) {
    if (config.no_cache || config.cache_dir.empty()) return std::nullopt;
    return ResultCache(config.cache_dir);
}

Graph parse_target(const std::string &target, const CliConfig &config) {
    if (target == "k2") return standard_graph("complete", 2);
    if (target == "k3") return standard_graph("complete", 3);
    if (target == "k4") return standard_graph("complete", 4);
    return load(target, config).precolored.graph;
}

json certificate_summary(const ConsistencyResult &res, const Graph &g, const Graph &h) {
    ReplayStats stats = replay_exhaustive(res.strategy, g, h);
    return json{{"type", "spoiler_strategy"},
                {"positions", res.strategy.size()},
                {"passes", res.passes},
                {"replay_max_placements", stats.max_placements},
                {"replay_lines", stats.lines},
                {"replay_verified", true}};
}

// ---- width ----------------------------------------------------------------

int cmd_width(const std::string &instance_path, const std::string &target,
              const CliConfig &config) {
    ReportTimer timer;
    Budget budget = config.budget();
    Instance instance = load(instance_path, config);
    const Graph &g = instance.precolored.graph;
    Graph h = parse_target(target, config);
    std::string digest = instance_digest(instance.precolored, budget);

    if (auto hom = homomorphism_exists(g, h, budget)) {
        json result{{"refutable", false}, {"homomorphism", *hom}};
        emit_report("width", digest, result, timer, config);
        return 3;
    }

    std::string cache_key;
    auto cache = open_cache(config);
    if (cache) {
        cache_key = digest_hex("width|" + digest + "|" + instance_digest(PrecoloredGraph(h), budget));
        if (auto hit = cache->get(cache_key)) {
            json payload = json::parse(*hit);
            emit_report("width", digest, payload.at("result"), timer, config, std::nullopt,
                        payload.at("certificate"));
            return 0;
        }
    }

    WidthReport report = width(g, h, budget, config.max_k);
    json result{{"refutable", true},
                {"width", report.width},
                {"rounds", report.rounds},
                {"solver_ms", report.elapsed.count()}};
    json cert = certificate_summary(report.certificate, g, h);
    if (cache) cache->put(cache_key, json{{"result", result}, {"certificate", cert}}.dump());
    emit_report("width", digest, result, timer, config, std::nullopt, cert);
    return 0;
}

// ---- consistency ----------------------------------------------------------

int cmd_consistency(const std::string &instance_path, const std::string &target, int k,
                    const CliConfig &config) {
    ReportTimer timer;
    Budget budget = config.budget();
    Instance instance = load(instance_path, config);
    const Graph &g = instance.precolored.graph;
    Graph h = parse_target(target, config);
    std::string digest = instance_digest(instance.precolored, budget);

    std::string cache_key;
    auto cache = open_cache(config);
    if (cache) {
        cache_key = digest_hex("consistency|" + std::to_string(k) + "|" + digest + "|" +
                               instance_digest(PrecoloredGraph(h), budget));
        if (auto hit = cache->get(cache_key)) {
            json payload = json::parse(*hit);
            std::optional<json> cert;
            if (payload.contains("certificate")) cert = payload.at("certificate");
            emit_report("consistency", digest, payload.at("result"), timer, config, std::nullopt,
                        cert);
            return 0;
        }
    }

    ConsistencyResult res = k_consistent(g, h, k, budget);
    json result{{"k", k},
                {"duplicator_wins", res.duplicator_wins},
                {"surviving_maps", res.surviving_maps},
                {"initial_maps", res.initial_maps},
                {"passes", res.passes}};
    std::optional<json> cert;
    if (!res.duplicator_wins) cert = certificate_summary(res, g, h);
    if (cache) {
        json payload{{"result", result}};
        if (cert) payload["certificate"] = *cert;
        cache->put(cache_key, payload.dump());
    }
    emit_report("consistency", digest, result, timer, config, std::nullopt, cert);
    return 0;
}

// ---- game -----------------------------------------------------------------

int cmd_game(const std::string &instance_path, int k, int rounds, bool want_min_rounds,
             const CliConfig &config) {
    ReportTimer timer;
    Budget budget = config.budget();
    Instance instance = load(instance_path, config);
    std::string digest = instance_digest(instance.precolored, budget);
    json result{{"k", k}};
    if (want_min_rounds || rounds < 0) {
        if (config.max_rounds >= 0) {
            if (instance.precolored.colored_count() > k)
                raise(Errc::precolor_over_capacity, "instance colours more than k vertices");
            GameSolver solver(instance.precolored.graph, k, ErasureMode::multi, budget);
            solver.run_rounds(config.max_rounds);
            int rw = solver.rounds_to_win(solver.encode_position(instance.precolored));
            bool won = rw >= 0 && rw <= config.max_rounds;
            result["round_cap"] = config.max_rounds;
            result["min_rounds"] = won ? json(rw) : json(nullptr);
            result["spoiler_wins"] = won;
        } else {
            auto r = min_rounds(instance.precolored, k, budget);
            result["min_rounds"] = r ? json(*r) : json(nullptr);
            result["spoiler_wins"] = r.has_value();
        }
    } else {
        result["rounds"] = rounds;
        result["spoiler_wins"] =
            game_value(instance.precolored, k, rounds, budget) == GameValue::spoiler_wins;
    }
    emit_report("game", digest, result, timer, config);
    return 0;
}

// ---- enumerate ------------------------------------------------------------

int cmd_enumerate(int k, int rounds, int n_max, bool trees_only, bool orbits,
                  const CliConfig &config) {
    ReportTimer timer;
    Budget budget = config.budget();
    auto members = enumerate_Mkr(k, rounds, n_max, trees_only, budget);
    json list = json::array();
    for (const auto &m : members) {
        json entry{{"instance", instance_json(m.precolored)},
                   {"canonical", m.canonical.hex()}};
        if (m.precolored.graph.is_tree()) {
            TreeLemmaReport tl = check_tree_lemmas(m);
            entry["tree_lemmas"] = json{{"leaves_only_colored", tl.leaves_only_colored},
                                        {"internal_degree_3", tl.internal_degree_3},
                                        {"fewer_than_k_leaves", tl.fewer_than_k_leaves},
                                        {"leaf_bound_boundary", tl.leaf_bound_boundary},
                                        {"diameter_ok", tl.diameter_ok},
                                        {"leaves", tl.leaves},
                                        {"diameter", tl.diameter}};
        }
        list.push_back(std::move(entry));
    }
    json result{{"k", k}, {"rounds", rounds}, {"n_max", n_max},
                {"trees_only", trees_only}, {"count", members.size()}, {"members", list}};
    if (orbits) {
        json orbit_list = json::array();
        for (const auto &orbit : group_by_color_orbit(members, budget)) {
            json entry{{"orbit_key", orbit.orbit_key.hex()}, {"members", orbit.members}};
            orbit_list.push_back(std::move(entry));
        }
        result["orbits"] = std::move(orbit_list);
    }
    std::string digest = digest_hex("enumerate|" + std::to_string(k) + "|" +
                                    std::to_string(rounds) + "|" + std::to_string(n_max) + "|" +
                                    std::to_string(trees_only));
    emit_report("enumerate", digest, result, timer, config);
    return 0;
}

// ---- generate ---------------------------------------------------------------

int cmd_generate(const std::string &family, int param, int degree, const std::string &of_path,
                 bool raw, const CliConfig &config) {
    ReportTimer timer;
    Budget budget = config.budget();
    Graph g;
    json extra = json::object();
    if (family == "random-regular") {
        if (param < 0 || degree < 0)
            raise(Errc::bad_params, "random-regular needs <n> and <degree>");
        g = random_regular(param, degree, config.seed, budget);
        extra["seed"] = config.seed;
    } else if (family == "triple-cover") {
        if (of_path.empty()) raise(Errc::bad_params, "triple-cover needs --of <instance>");
        TripleCover cover = triple_cover(load(of_path, config).precolored.graph, budget);
        g = cover.graph;
        extra["base_connected"] = cover.base_connected;
        extra["base_chromatic_exceeds_3"] = cover.base_chromatic_exceeds_3;
    } else if (family == "gadget") {
        CrossoverGadget gadget = crossover_gadget();
        g = gadget.graph;
        extra["corners"] = {gadget.left, gadget.right, gadget.top, gadget.bottom};
    } else if (family == "mycielski" && !of_path.empty()) {
        g = mycielskian(load(of_path, config).precolored.graph);
    } else {
        g = standard_graph(family, param);
    }

    PrecoloredGraph p(g);
    if (raw) {
        bool as_json = config.format == "json";
        emit(as_json ? serialize_instance_json(p) : serialize_dimacs(g), config);
        return 0;
    }
    json result{{"family", family},
                {"n", g.vertex_count()},
                {"m", g.edge_count()},
                {"instance", instance_json(p)}};
    result.update(extra);
    emit_report("generate", instance_digest(p, budget), result, timer, config);
    return 0;
}

// ---- planarize --------------------------------------------------------------

json rational_pair(const Rat &r) {
    return json::array({boost::multiprecision::numerator(r).str(),
                        boost::multiprecision::denominator(r).str()});
}

json drawing_json(const Drawing &d) {
    json coords = json::array();
    for (const Point &p : d.coords) {
        json xs = rational_pair(p.x), ys = rational_pair(p.y);
        coords.push_back(json::array({xs[0], xs[1], ys[0], ys[1]}));
    }
    return json{{"coords", std::move(coords)}};
}

int cmd_planarize(const std::string &instance_path, const std::string &coords_out,
                  bool identify_larger, bool swap_axes, const CliConfig &config) {
    ReportTimer timer;
    Budget budget = config.budget();
    Instance instance = load(instance_path, config);
    const Graph &g = instance.precolored.graph;
    PlanarizeOptions options{identify_larger, swap_axes};
    PlanarizationResult res = planarize(g, config.seed, options, budget);

    json gadgets = json::array();
    for (const auto &record : res.gadget_records) {
        gadgets.push_back(json{{"crossing", record.crossing_index},
                               {"vertices", record.vertex_ids},
                               {"corners", record.corner_ids}});
    }
    json result{{"crossings", res.crossing_count},
                {"vertices", res.g_prime.vertex_count()},
                {"edges", res.g_prime.edge_count()},
                {"endpoint_identifications", res.endpoint_identifications},
                {"corner_sharings", res.corner_sharings},
                {"original_vertex_map", res.original_vertex_map},
                {"gadgets", std::move(gadgets)},
                {"g_prime", instance_json(PrecoloredGraph(res.g_prime))},
                {"drawing", drawing_json(res.drawing)}};
    if (!coords_out.empty()) {
        std::ofstream out(coords_out, std::ios::binary | std::ios::trunc);
        if (!out) raise(Errc::bad_params, "cannot open " + coords_out);
        out << drawing_json(res.drawing).dump(2) << "\n";
    }
    emit_report("planarize", instance_digest(instance.precolored, budget), result, timer, config);
    return 0;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const std::string &instance_path, const CliConfig &config) {
    ReportTimer timer;
    Budget budget = config.budget();
    Instance instance = load(instance_path, config);
    std::string digest = instance_digest(instance.precolored, budget);
    BoundReport report = verify_bounds(instance.precolored.graph, budget);
    json bounds{{"independence_bound", report.independence_bound},
                {"freuder_bound", report.freuder_bound},
                {"girth", report.girth},
                {"floor", 4},
                {"independence_ok", report.independence_ok},
                {"freuder_ok", report.freuder_ok},
                {"girth_ok", report.girth_ok},
                {"floor_ok", report.floor_ok}};
    json result{{"width", report.width}, {"alpha", report.alpha},
                {"girth", report.girth}, {"treewidth", report.treewidth},
                {"all_ok", report.all_ok()}};
    emit_report("verify", digest, result, timer, config, bounds);
    if (!report.all_ok()) {
        // A violated bound falsifies the solvers, not the theorems.
        std::cerr << "FATAL: bound violation; forensic dump follows\n"
                  << json{{"instance", instance_json(instance.precolored)},
                          {"report", result},
                          {"bounds", bounds}}
                         .dump(2)
                  << "\n";
        return 1;
    }
    return 0;
}

// ---- survey -----------------------------------------------------------------

int cmd_survey(int n, const CliConfig &config) {
    ReportTimer timer;
    Budget budget = config.budget();
    auto cache = open_cache(config);
    WidthCacheLookup lookup;
    WidthCacheStore store;
    if (cache) {
        lookup = [&cache](const std::string &key) -> std::optional<int> {
            auto hit = cache->get("survey-width-" + key);
            if (!hit) return std::nullopt;
            return json::parse(*hit).at("width").get<int>();
        };
        store = [&cache](const std::string &key, int w) {
            cache->put("survey-width-" + key, json{{"width", w}}.dump());
        };
    }
    SurveyResult res = survey_Wn(n, budget, config.workers, lookup, store);
    json result{{"n", res.n},
                {"width", res.width},
                {"witness_canonical", res.witness.hex()},
                {"witness", instance_json(decode_canonical(res.witness))},
                {"classes_examined", res.classes_examined},
                {"witnesses_at_max", res.witnesses_at_max},
                {"ceiling", 3 * n / 4 + 1}};
    emit_report("survey", digest_hex("survey|" + std::to_string(n)), result, timer, config);
    return 0;
}

// ---- play -------------------------------------------------------------------

void print_position(const PrecoloredGraph &p, std::ostream &out) {
    out << "  position:";
    for (Vertex v = 0; v < p.graph.vertex_count(); ++v)
        out << " " << v << ":" << color_letter(p.colors[v]);
    out << "\n";
}

std::optional<std::pair<Vertex, Vertex>> violated_edge(const PrecoloredGraph &p) {
    for (auto [u, v] : p.graph.edges())
        if (p.colors[u] != kUncolored && p.colors[u] == p.colors[v]) return {{u, v}};
    return std::nullopt;
}

int self_play(GameSolver &solver, const PrecoloredGraph &start, const CliConfig &config) {
    // Optimal Spoiler versus every Duplicator reply; verifies the round bound.
    ReportTimer timer;
    int bound = solver.rounds_to_win(solver.encode_position(start));
    std::uint64_t lines = 0;
    int deepest = 0;
    auto rec = [&](auto &&self, PrecoloredGraph pos, int depth) -> void {
        if (violated_edge(pos)) {
            ++lines;
            deepest = std::max(deepest, depth);
            if (depth > bound)
                throw std::logic_error("self-play exceeded the solver's round bound");
            return;
        }
        auto move = solver.spoiler_move(pos);
        for (Vertex v : move.erased) pos.colors[v] = kUncolored;
        for (Color c = 0; c < kNumColors; ++c) {
            PrecoloredGraph next = pos;
            next.colors[move.place] = c;
            self(self, next, depth + 1);
        }
    };
    rec(rec, start, 0);
    json result{{"mode", "self-play"},
                {"round_bound", bound},
                {"deepest_line", deepest},
                {"duplicator_lines", lines},
                {"verified", true}};
    emit_report("play", instance_digest(start, config.budget()), result, timer, config);
    return 0;
}

int cmd_play(const std::string &instance_path, int k, bool self, bool swap_roles,
             const CliConfig &config) {
    ReportTimer timer;
    Budget budget = config.budget();
    Instance instance = load(instance_path, config);
    PrecoloredGraph pos = instance.precolored;
    if (pos.colored_count() > k)
        raise(Errc::precolor_over_capacity, "instance colours more than k vertices");

    GameSolver solver(pos.graph, k, ErasureMode::multi, budget);
    solver.run_to_stable();
    bool spoiler_can_win = solver.rounds_to_win(solver.encode_position(pos)) >= 0;

    if (self) {
        if (!spoiler_can_win) {
            emit_report("play", instance_digest(pos, budget),
                        json{{"mode", "self-play"}, {"spoiler_wins", false},
                             {"note", "Duplicator has a safe strategy at this capacity"}},
                        timer, config);
            return 0;
        }
        return self_play(solver, pos, config);
    }

    std::ostream &ui = std::cout;
    json moves = json::array();
    std::string winner;
    json violation = nullptr;
    if (!spoiler_can_win && !swap_roles) {
        ui << "Spoiler has no winning strategy at capacity " << k
           << "; Duplicator's safe strategy is available.\n"
           << "Re-run with --swap to play Spoiler against the Duplicator bot.\n";
        emit_report("play", instance_digest(pos, budget),
                    json{{"mode", "interactive"}, {"spoiler_wins", false}, {"offered_swap", true}},
                    timer, config);
        return 0;
    }

    int round = 0;
    if (!swap_roles) {
        ui << "You are Duplicator. Spoiler names vertices; answer with r/b/g (or 0/1/2).\n";
        print_position(pos, ui);
        while (true) {
            auto edge = violated_edge(pos);
            if (edge) {
                ui << "Monochromatic edge (" << edge->first << "," << edge->second
                   << "): Spoiler wins after " << round << " round(s).\n";
                winner = "spoiler";
                violation = json::array({edge->first, edge->second});
                break;
            }
            auto move = solver.spoiler_move(pos);
            for (Vertex v : move.erased) pos.colors[v] = kUncolored;
            if (!move.erased.empty()) {
                ui << "Spoiler erases:";
                for (Vertex v : move.erased) ui << " " << v;
                ui << "\n";
            }
            ui << "Spoiler selects vertex " << move.place << ". Your colour (r/b/g)? "
               << std::flush;
            std::string token;
            std::optional<Color> chosen;
            while (!chosen) {
                if (!(std::cin >> token)) {
                    ui << "\n(end of input) session aborted.\n";
                    emit_report("play", instance_digest(instance.precolored, budget),
                                json{{"mode", "interactive"}, {"moves", moves},
                                     {"winner", "aborted"}},
                                timer, config);
                    return 0;
                }
                chosen = color_from_token(token);
                if (!chosen) ui << "Please answer r, b or g: " << std::flush;
            }
            pos.colors[move.place] = *chosen;
            ++round;
            moves.push_back(json{{"round", round},
                                 {"erased", move.erased},
                                 {"vertex", move.place},
                                 {"color", *chosen}});
            print_position(pos, ui);
        }
    } else {
        ui << "You are Spoiler. Name an uncoloured vertex (the bot colours it); "
              "use 'e <v>' to erase first, 'q' to quit.\n";
        print_position(pos, ui);
        while (true) {
            auto edge = violated_edge(pos);
            if (edge) {
                ui << "Monochromatic edge (" << edge->first << "," << edge->second
                   << "): you win after " << round << " round(s).\n";
                winner = "spoiler(human)";
                violation = json::array({edge->first, edge->second});
                break;
            }
            std::string token;
            ui << "Your move (v | e v | q): " << std::flush;
            if (!(std::cin >> token) || token == "q") {
                ui << "\nsession closed.\n";
                winner = "aborted";
                break;
            }
            if (token == "e") {
                int v;
                if (!(std::cin >> v) || v < 0 || v >= pos.graph.vertex_count() ||
                    pos.colors[v] == kUncolored) {
                    ui << "nothing to erase there.\n";
                    std::cin.clear();
                    continue;
                }
                pos.colors[v] = kUncolored;
                continue;
            }
            int v;
            try {
                v = std::stoi(token);
            } catch (...) {
                ui << "name a vertex number.\n";
                continue;
            }
            if (v < 0 || v >= pos.graph.vertex_count() || pos.colors[v] != kUncolored) {
                ui << "pick an uncoloured vertex.\n";
                continue;
            }
            if (pos.colored_count() + 1 > k) {
                ui << "capacity " << k << " reached; erase first ('e <v>').\n";
                continue;
            }
            auto safe = solver.duplicator_safe_color(pos, v);
            Color reply = safe.value_or(0);
            if (!safe) {
                int best = -1;
                for (Color c = 0; c < kNumColors; ++c) {
                    PrecoloredGraph child = pos;
                    child.colors[v] = c;
                    int rw = solver.rounds_to_win(solver.encode_position(child));
                    if (rw > best) {
                        best = rw;
                        reply = c;
                    }
                }
            }
            pos.colors[v] = reply;
            ++round;
            moves.push_back(json{{"round", round}, {"vertex", v}, {"color", reply}});
            ui << "Duplicator colours " << v << " with " << color_letter(reply) << ".\n";
            print_position(pos, ui);
        }
    }
    emit_report("play", instance_digest(instance.precolored, budget),
                json{{"mode", "interactive"}, {"rounds", round}, {"moves", moves},
                     {"winner", winner}, {"violation", violation}},
                timer, config);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"widthlab: exact consistency-width laboratory for graph colouring"};
    app.require_subcommand(1);

    CliConfig config;
    app.add_option("--seed", config.seed, "RNG seed")->envname("WIDTHLAB_SEED");
    app.add_option("--workers", config.workers, "worker threads for surveys")
        ->envname("WIDTHLAB_WORKERS");
    app.add_option("--max-k", config.max_k, "capacity ceiling")->envname("WIDTHLAB_MAX_K");
    app.add_option("--max-rounds", config.max_rounds, "round ceiling")
        ->envname("WIDTHLAB_MAX_ROUNDS");
    app.add_option("--budget-nodes", config.budget_nodes, "search node budget")
        ->envname("WIDTHLAB_BUDGET_NODES");
    app.add_option("--format", config.format, "instance format: dimacs|json")
        ->envname("WIDTHLAB_FORMAT");
    app.add_option("--out", config.out, "write the report here instead of stdout")
        ->envname("WIDTHLAB_OUT");
    app.add_option("--cache-dir", config.cache_dir, "result cache directory")
        ->envname("WIDTHLAB_CACHE_DIR");
    app.add_flag("--no-cache", config.no_cache, "disable the result cache");

    std::string instance_path, target = "k3", of_path, coords_out, family;
    int k = 0, rounds = -1, n_max = 4, survey_n = 4, param = -1, degree = -1;
    bool trees_only = false, orbits = false, raw = false, min_rounds_flag = false;
    bool self_play_flag = false, swap_roles = false, identify_larger = false, swap_axes = false;

    auto *width_cmd = app.add_subcommand("width", "minimum k with a Spoiler win");
    width_cmd->add_option("instance", instance_path)->required();
    width_cmd->add_option("--target", target, "k2|k3|k4|<instance file>");

    auto *cons_cmd = app.add_subcommand("consistency", "k-consistency fixpoint at one level");
    cons_cmd->add_option("instance", instance_path)->required();
    cons_cmd->add_option("--k", k)->required();
    cons_cmd->add_option("--target", target);

    auto *game_cmd = app.add_subcommand("game", "bounded-round colouring game value");
    game_cmd->add_option("instance", instance_path)->required();
    game_cmd->add_option("--k", k)->required();
    game_cmd->add_option("--rounds", rounds, "round count (omit for min rounds)");
    game_cmd->add_flag("--min-rounds", min_rounds_flag, "solve for the minimum winning rounds");

    auto *enum_cmd = app.add_subcommand("enumerate", "minimal Spoiler-win families");
    enum_cmd->add_option("--k", k)->required();
    enum_cmd->add_option("--rounds", rounds)->required();
    enum_cmd->add_option("--nmax", n_max);
    enum_cmd->add_flag("--trees-only", trees_only);
    enum_cmd->add_flag("--orbits", orbits, "group members by colour-permutation orbit");

    auto *gen_cmd = app.add_subcommand("generate", "named graph families");
    gen_cmd->add_option("family", family,
                        "complete|cycle|path|wheel|petersen|grotzsch|mycielski|"
                        "random-regular|triple-cover|gadget")
        ->required();
    gen_cmd->add_option("param", param, "size parameter");
    gen_cmd->add_option("degree", degree, "degree (random-regular)");
    gen_cmd->add_option("--of", of_path, "base instance (triple-cover, mycielski)");
    gen_cmd->add_flag("--raw", raw, "emit the bare instance instead of a report");

    auto *plan_cmd = app.add_subcommand("planarize", "crossover-gadget planarization");
    plan_cmd->add_option("instance", instance_path)->required();
    plan_cmd->add_option("--coords-out", coords_out, "write the exact drawing JSON here");
    plan_cmd->add_flag("--identify-larger", identify_larger);
    plan_cmd->add_flag("--swap-axes", swap_axes);

    auto *verify_cmd = app.add_subcommand("verify", "per-graph bound report");
    verify_cmd->add_option("instance", instance_path)->required();

    auto *survey_cmd = app.add_subcommand("survey", "exhaustive dynamic width W(n)");
    survey_cmd->add_option("--n", survey_n)->required();

    auto *play_cmd = app.add_subcommand("play", "interactive game against the solver");
    play_cmd->add_option("instance", instance_path)->required();
    play_cmd->add_option("--k", k)->required();
    play_cmd->add_flag("--self-play", self_play_flag, "certificate replay instead of a prompt");
    play_cmd->add_flag("--swap", swap_roles, "play Spoiler against the Duplicator bot");

    // Global flags may trail the subcommand.
    for (CLI::App *sub : app.get_subcommands([](const CLI::App *) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (width_cmd->parsed()) return cmd_width(instance_path, target, config);
        if (cons_cmd->parsed()) return cmd_consistency(instance_path, target, k, config);
        if (game_cmd->parsed()) return cmd_game(instance_path, k, rounds, min_rounds_flag, config);
        if (enum_cmd->parsed()) return cmd_enumerate(k, rounds, n_max, trees_only, orbits, config);
        if (gen_cmd->parsed()) return cmd_generate(family, param, degree, of_path, raw, config);
        if (plan_cmd->parsed())
            return cmd_planarize(instance_path, coords_out, identify_larger, swap_axes, config);
        if (verify_cmd->parsed()) return cmd_verify(instance_path, config);
        if (survey_cmd->parsed()) return cmd_survey(survey_n, config);
        if (play_cmd->parsed()) return cmd_play(instance_path, k, self_play_flag, swap_roles, config);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
