#include "widthlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace widthlab {

namespace {

using Partition = std::vector<std::vector<Vertex>>;

// Split every cell by the multiset of neighbour counts against the current
// cells; repeat until stable.  Cell order is maintained invariantly (history
// order, then signature order), so the partition sequence is canonical.
void refine(const Graph &g, Partition &partition) {
    bool changed = true;
    while (changed) {
        changed = false;
        Partition next;
        next.reserve(partition.size());
        for (const auto &cell : partition) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<Vertex>> groups;
            for (Vertex v : cell) {
                std::vector<int> sig;
                sig.reserve(partition.size());
                for (const auto &other : partition) {
                    int count = 0;
                    for (Vertex w : other) count += g.adjacent(v, w);
                    sig.push_back(count);
                }
                groups[sig].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto &[sig, members] : groups) next.push_back(std::move(members));
        }
        partition = std::move(next);
    }
}

std::string encode_under(const PrecoloredGraph &p, const std::vector<Vertex> &order) {
    int n = p.graph.vertex_count();
    std::string out;
    out.reserve(1 + n + (n * (n - 1) / 2 + 7) / 8);
    out.push_back(static_cast<char>(n));
    for (Vertex v : order) out.push_back(static_cast<char>(p.colors[v] + 1));
    int bit = 0;
    char acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (p.graph.adjacent(order[i], order[j])) acc |= static_cast<char>(1 << bit);
            if (++bit == 8) {
                out.push_back(acc);
                acc = 0;
                bit = 0;
            }
        }
    if (bit > 0) out.push_back(acc);
    return out;
}

struct CanonSearch {
    const PrecoloredGraph &p;
    std::string best;
    bool have_best = false;

    void visit(Partition partition) {
        refine(p.graph, partition);
        std::size_t split = partition.size();
        for (std::size_t i = 0; i < partition.size(); ++i)
            if (partition[i].size() > 1) {
                split = i;
                break;
            }
        if (split == partition.size()) {
            std::vector<Vertex> order;
            order.reserve(partition.size());
            for (const auto &cell : partition) order.push_back(cell[0]);
            std::string enc = encode_under(p, order);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }
        for (Vertex v : partition[split]) {
            Partition child;
            child.reserve(partition.size() + 1);
            for (std::size_t i = 0; i < partition.size(); ++i) {
                if (i != split) {
                    child.push_back(partition[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<Vertex> rest;
                for (Vertex w : partition[split])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            visit(std::move(child));
        }
    }
};

} // namespace

std::string CanonicalForm::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalForm canonical_form(const PrecoloredGraph &p, const Budget &budget) {
    int n = p.graph.vertex_count();
    if (n > budget.canonical_max_n)
        raise(Errc::resource_cap,
              "canonical_form supports n <= " + std::to_string(budget.canonical_max_n));
    if (n == 0) return CanonicalForm{std::string(1, '\0')};

    // Initial cells keyed by (precolour, degree).
    std::map<std::pair<int, int>, std::vector<Vertex>> seed;
    for (Vertex v = 0; v < n; ++v)
        seed[{p.colors[v], p.graph.degree(v)}].push_back(v);
    Partition partition;
    for (auto &[key, members] : seed) partition.push_back(std::move(members));

    CanonSearch search{p};
    search.visit(std::move(partition));
    return CanonicalForm{std::move(search.best)};
}

CanonicalForm canonical_form(const Graph &g, const Budget &budget) {
    return canonical_form(PrecoloredGraph(g), budget);
}

PrecoloredGraph decode_canonical(const CanonicalForm &form) {
    const std::string &b = form.bytes;
    if (b.empty()) raise(Errc::bad_params, "empty canonical encoding");
    int n = static_cast<unsigned char>(b[0]);
    std::vector<Color> colors(n);
    for (int i = 0; i < n; ++i) colors[i] = static_cast<unsigned char>(b[1 + i]) - 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int bit = 0;
    std::size_t pos = 1 + n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (pos >= b.size()) raise(Errc::bad_params, "truncated canonical encoding");
            if ((static_cast<unsigned char>(b[pos]) >> bit) & 1) edges.emplace_back(i, j);
            if (++bit == 8) {
                bit = 0;
                ++pos;
            }
        }
    return PrecoloredGraph(Graph(n, edges), std::move(colors));
}

PrecoloredGraph apply_color_permutation(const PrecoloredGraph &p, const std::array<Color, 3> &perm) {
    PrecoloredGraph out = p;
    for (Color &c : out.colors)
        if (c != kUncolored) c = perm[c];
    return out;
}

CanonicalForm s3_orbit_representative(const PrecoloredGraph &p, const Budget &budget) {
    static const std::array<std::array<Color, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    CanonicalForm best;
    bool first = true;
    for (const auto &perm : perms) {
        CanonicalForm form = canonical_form(apply_color_permutation(p, perm), budget);
        if (first || form < best) {
            best = std::move(form);
            first = false;
        }
    }
    return best;
}

} // namespace widthlab
