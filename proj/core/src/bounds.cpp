#include "widthlab/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <set>
#include <thread>

#include "widthlab/consistency.hpp"
#include "widthlab/enumeration.hpp"
#include "widthlab/homomorphism.hpp"
#include "widthlab/invariants.hpp"

namespace widthlab {

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

} // namespace

BoundReport verify_bounds(const Graph &g, const Budget &budget) {
    if (is_3_colorable(g, budget))
        raise(Errc::not_4_chromatic, "verify_bounds needs a non-3-colorable graph");
    BoundReport report;
    report.n = g.vertex_count();
    report.width = width(g, triangle(), budget).width;
    report.alpha = independence_number(g, budget);
    auto gg = girth(g);
    if (!gg) throw std::logic_error("non-3-colorable graph reported as a forest");
    report.girth = *gg;
    report.treewidth = treewidth_exact(g, budget);

    report.independence_bound = std::min(3 * report.alpha, report.n - report.alpha) + 1;
    report.freuder_bound = report.treewidth + 1;
    report.independence_ok = report.width <= report.independence_bound;
    report.freuder_ok = report.width <= report.freuder_bound;
    report.girth_ok = 16 * report.width > report.girth;
    report.floor_ok = report.width >= 4;
    return report;
}

SurveyResult survey_Wn(int n, const Budget &budget, int workers, WidthCacheLookup lookup,
                       WidthCacheStore store) {
    if (n <= 3) raise(Errc::no_witness, "every graph on <= 3 vertices is 3-colorable");
    if (n > budget.survey_max_n)
        raise(Errc::resource_cap,
              "survey supports n <= " + std::to_string(budget.survey_max_n) +
                  " by default (override the budget to go further)");
    int pairs = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t{1} << pairs;
    workers = std::max(1, workers);

    // Phase 1: canonical forms of all non-3-colorable graphs, sharded over
    // the labelled bitmask space; a chi >= 4 graph needs at least 6 edges.
    std::vector<std::set<std::string>> shards(workers);
    {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w]() {
                std::uint64_t begin = total / workers * w;
                std::uint64_t end = (w == workers - 1) ? total : total / workers * (w + 1);
                for (std::uint64_t mask = begin; mask < end; ++mask) {
                    if (std::popcount(mask) < 6) continue;
                    Graph g = graph_from_mask(n, mask);
                    if (is_3_colorable(g, budget)) continue;
                    shards[w].insert(canonical_form(g, budget).bytes);
                }
            });
        for (auto &t : threads) t.join();
    }
    std::set<std::string> classes;
    for (auto &shard : shards) classes.merge(shard);

    // Phase 2: width per class, cache-backed, deterministic reduce.
    std::vector<std::string> ordered(classes.begin(), classes.end());
    std::vector<int> widths(ordered.size(), -1);
    {
        std::atomic<std::size_t> cursor{0};
        std::mutex cache_mutex;
        Graph k3 = triangle();
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&]() {
                for (;;) {
                    std::size_t i = cursor.fetch_add(1);
                    if (i >= ordered.size()) break;
                    CanonicalForm form{ordered[i]};
                    std::string digest = form.hex();
                    if (lookup) {
                        std::lock_guard lock(cache_mutex);
                        if (auto hit = lookup(digest)) {
                            widths[i] = *hit;
                            continue;
                        }
                    }
                    Graph g = decode_canonical(form).graph;
                    widths[i] = width(g, k3, budget).width;
                    if (store) {
                        std::lock_guard lock(cache_mutex);
                        store(digest, widths[i]);
                    }
                }
            });
        for (auto &t : threads) t.join();
    }

    SurveyResult result;
    result.n = n;
    result.classes_examined = ordered.size();
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (widths[i] > result.width) {
            result.width = widths[i];
            result.witness = CanonicalForm{ordered[i]};
            result.witnesses_at_max = 1;
        } else if (widths[i] == result.width) {
            ++result.witnesses_at_max;
        }
    }
    if (result.width < 4 || result.width > 3 * n / 4 + 1)
        throw std::logic_error("survey width " + std::to_string(result.width) +
                               " escapes the proven floor/ceiling at n = " + std::to_string(n));
    return result;
}

BigInt nz_girth_threshold(int k, int m) {
    if (k < 1 || m < 1) raise(Errc::bad_params, "nz_girth_threshold needs k, m >= 1");
    BigInt base = 4 * static_cast<long long>(k) * m;
    BigInt power = 1;
    for (long long e = 4LL * k * m - 1; e > 0; --e) power *= base;
    return (BigInt(1) << (k + 2)) * power + 2 * (k + 1);
}

int nz_max_k(const BigInt &girth, int m) {
    if (m < 1) raise(Errc::bad_params, "nz_max_k needs m >= 1");
    int best = 0;
    for (int k = 1;; ++k) {
        if (nz_girth_threshold(k, m) < girth)
            best = k;
        else
            break; // thresholds increase in k
    }
    return best;
}

ObstructionResult obstruction_search(const Graph &g, const Graph &h, int max_vertices,
                                     int max_tw, const Budget &budget) {
    if (max_vertices < 1 || max_vertices > 7)
        raise(Errc::bad_params, "obstruction_search supports 1 <= max_vertices <= 7");
    if (homomorphism_exists(g, h, budget))
        raise(Errc::no_refutation, "instance maps to the target; no obstruction can exist");

    ObstructionResult result;
    for (int m = 1; m <= max_vertices; ++m) {
        for (const Graph &f : all_graphs_up_to_iso(m, budget)) {
            ++result.candidates_checked;
            if (treewidth_exact(f, budget) > max_tw) continue;
            if (!homomorphism_exists(f, g, budget)) continue;
            if (homomorphism_exists(f, h, budget)) continue;
            result.obstruction = f;
            result.treewidth = treewidth_exact(f, budget);
            return result;
        }
    }
    result.bounds_exhausted = true;
    return result;
}

} // namespace widthlab
