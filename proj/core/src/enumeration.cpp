#include "widthlab/enumeration.hpp"

#include <algorithm>
#include <set>

namespace widthlab {

namespace {

std::vector<Graph> decode_sorted(std::set<std::string> &&forms) {
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const auto &bytes : forms)
        out.push_back(decode_canonical(CanonicalForm{bytes}).graph);
    return out;
}

} // namespace

std::vector<Graph> all_graphs_up_to_iso(int n, const Budget &budget) {
    if (n < 0) raise(Errc::bad_params, "negative vertex count");
    if (n > budget.canonical_max_n)
        raise(Errc::resource_cap, "graph enumeration needs canonical forms (n <= " +
                                      std::to_string(budget.canonical_max_n) + ")");
    if (n == 0) return {Graph(0)};
    std::vector<Graph> level = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::set<std::string> forms;
        for (const Graph &g : level) {
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (m - 1)); ++mask) {
                std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
                for (int v = 0; v < m - 1; ++v)
                    if ((mask >> v) & 1) edges.emplace_back(v, m - 1);
                Graph extended(m, edges);
                forms.insert(canonical_form(extended, budget).bytes);
            }
        }
        level = decode_sorted(std::move(forms));
    }
    return level;
}

std::vector<Graph> all_trees_up_to_iso(int n, const Budget &budget) {
    if (n <= 0) raise(Errc::bad_params, "tree enumeration needs n >= 1");
    if (n > budget.canonical_max_n)
        raise(Errc::resource_cap, "tree enumeration needs canonical forms");
    std::vector<Graph> level = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::set<std::string> forms;
        for (const Graph &t : level) {
            for (Vertex attach = 0; attach < m - 1; ++attach) {
                std::vector<std::pair<Vertex, Vertex>> edges = t.edges();
                edges.emplace_back(attach, m - 1);
                forms.insert(canonical_form(Graph(m, edges), budget).bytes);
            }
        }
        level = decode_sorted(std::move(forms));
    }
    return level;
}

} // namespace widthlab
