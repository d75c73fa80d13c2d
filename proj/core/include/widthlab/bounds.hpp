#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>

#include "widthlab/canonical.hpp"
#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

using BigInt = boost::multiprecision::cpp_int;

struct BoundReport {
    int n = 0;
    int width = 0;
    int alpha = 0;
    int girth = 0; // non-3-colorable graphs always have a cycle
    int treewidth = 0;
    int independence_bound = 0; // min{3a, n-a} + 1
    int freuder_bound = 0;      // tw + 1
    bool independence_ok = false;
    bool girth_ok = false; // 16 W > girth
    bool freuder_ok = false;
    bool floor_ok = false; // W >= 4
    bool all_ok() const { return independence_ok && girth_ok && freuder_ok && floor_ok; }
};

// Computes W(g) = width(g, K3) and checks every bound; a violated bound
// means a solver bug, so callers treat it as fatal.
BoundReport verify_bounds(const Graph &g, const Budget &budget = default_budget());

struct SurveyResult {
    int n = 0;
    int width = 0;                      // W(n)
    CanonicalForm witness;              // smallest canonical witness at the max
    std::uint64_t witnesses_at_max = 0;
    std::uint64_t classes_examined = 0; // non-3-colorable isomorphism classes
};

// Exhaustive dynamic-width survey over all non-3-colorable n-vertex graphs
// up to isomorphism.  `lookup`/`store` plug in the on-disk width cache keyed
// by canonical hex digests.
using WidthCacheLookup = std::function<std::optional<int>(const std::string &)>;
using WidthCacheStore = std::function<void(const std::string &, int)>;
SurveyResult survey_Wn(int n, const Budget &budget = default_budget(), int workers = 1,
                       WidthCacheLookup lookup = {}, WidthCacheStore store = {});

// Exact value of 2^(k+2) * (4km)^(4km-1) + 2(k+1).
BigInt nz_girth_threshold(int k, int m);

// Largest k >= 1 whose threshold lies strictly below the girth; 0 if none.
int nz_max_k(const BigInt &girth, int m);

struct ObstructionResult {
    std::optional<Graph> obstruction; // first hit in canonical order
    int treewidth = -1;
    bool bounds_exhausted = false;
    std::uint64_t candidates_checked = 0;
};

// Exhaustive search for F with F -> g, F not-> h and tw(F) <= max_tw, over
// graphs with at most max_vertices vertices up to isomorphism.  Absence
// within bounds is not evidence that no obstruction exists.
ObstructionResult obstruction_search(const Graph &g, const Graph &h, int max_vertices,
                                     int max_tw, const Budget &budget = default_budget());

} // namespace widthlab
