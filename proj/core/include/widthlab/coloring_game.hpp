#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "widthlab/canonical.hpp"
#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

enum class GameValue { spoiler_wins, duplicator_wins };

enum class ErasureMode {
    multi,  // Spoiler may erase any subset of colours before naming a vertex
    single, // at most one erasure per round
};

// Exact solver for the r-round capacity-k 3-colouring game on one underlying
// graph.  Positions are partial colourings packed 2 bits per vertex
// (0 = uncoloured); min_rounds_to_win[p] is the least r such that Spoiler
// wins the r-round game from p, or -1 within the passes run so far.
class GameSolver {
public:
    GameSolver(Graph g, int k, ErasureMode mode = ErasureMode::multi,
               const Budget &budget = default_budget());

    const Graph &graph() const { return graph_; }
    int capacity() const { return k_; }
    ErasureMode mode() const { return mode_; }
    bool stabilized() const { return stabilized_; }
    int passes_run() const { return passes_; }

    void run_rounds(int rounds);  // ensure passes up to `rounds`
    void run_to_stable();

    static std::size_t encode(const std::vector<Color> &colors);
    std::size_t encode_position(const PrecoloredGraph &p) const;

    // Least r with a Spoiler win from the position; -1 means no win within
    // the passes run (guaranteed NoWin once stabilized).
    int rounds_to_win(std::size_t position) const { return rwin_[position]; }
    bool spoiler_wins(const PrecoloredGraph &p, int r);

    // Optimal Spoiler move from a winning position: erase `erased`, then ask
    // for `place`.  Position must satisfy rounds_to_win >= 1.
    struct Move {
        std::vector<Vertex> erased;
        Vertex place = -1;
    };
    Move spoiler_move(const PrecoloredGraph &p);

    // A colour for `place` keeping Duplicator safe (rwin = -1 after the
    // move), if one exists; requires a stabilized table to be meaningful.
    std::optional<Color> duplicator_safe_color(const PrecoloredGraph &p, Vertex place);

private:
    void initialize();
    bool run_one_pass();

    Graph graph_;
    int k_;
    ErasureMode mode_;
    int n_;
    std::size_t size_;
    std::vector<std::int16_t> rwin_;
    int passes_ = 0;
    bool stabilized_ = false;
};

// Memoizes solvers across identically-labelled graphs; the enumerator and the
// minimality checker hit the same subgraphs repeatedly.
class GameSolverCache {
public:
    explicit GameSolverCache(ErasureMode mode = ErasureMode::multi,
                             const Budget &budget = default_budget())
        : mode_(mode), budget_(budget) {}
    GameSolver &solver(const Graph &g, int k);

private:
    ErasureMode mode_;
    Budget budget_;
    std::unordered_map<std::string, std::unique_ptr<GameSolver>> entries_;
};

GameValue game_value(const PrecoloredGraph &p, int k, int r,
                     const Budget &budget = default_budget());

// Least r with a Spoiler win; nullopt = NoWin (Duplicator wins every r).
std::optional<int> min_rounds(const PrecoloredGraph &p, int k,
                              const Budget &budget = default_budget());

// True iff Spoiler wins at (k, r) and every one-step weakening (vertex
// deletion, edge deletion, single uncolouring) hands the game to Duplicator.
bool is_minimal_member(const PrecoloredGraph &p, int k, int r,
                       const Budget &budget = default_budget());

struct MkrMember {
    PrecoloredGraph precolored;
    int k = 0;
    int r = 0;
    CanonicalForm canonical;
};

// All minimal Spoiler-win instances at (k, r) with at most n_max vertices,
// one representative per colour-preserving isomorphism class, ordered by
// canonical encoding.
std::vector<MkrMember> enumerate_Mkr(int k, int r, int n_max, bool trees_only,
                                     const Budget &budget = default_budget());

// Groups members into S3 colour-permutation orbits (indices into the input).
struct MkrOrbit {
    CanonicalForm orbit_key;
    std::vector<std::size_t> members;
};
std::vector<MkrOrbit> group_by_color_orbit(const std::vector<MkrMember> &members,
                                           const Budget &budget = default_budget());

struct TreeLemmaReport {
    bool leaves_only_colored = false;   // all leaves coloured, no internal coloured
    bool internal_degree_3 = false;     // every non-leaf has degree exactly 3
    bool fewer_than_k_leaves = false;   // #leaves < k
    bool leaf_bound_boundary = false;   // already-violated member: leaf bound reported, not asserted
    bool diameter_ok = false;           // diameter <= 2^r
    int leaves = 0;
    int diameter = 0;
    bool all_ok() const {
        return leaves_only_colored && internal_degree_3 &&
               (fewer_than_k_leaves || leaf_bound_boundary) && diameter_ok;
    }
};
TreeLemmaReport check_tree_lemmas(const MkrMember &member);

struct SeparatorCheck {
    bool extendable = false;               // the leaf colouring extends properly
    std::optional<bool> spoiler_wins;      // computed when not extendable
    bool ok = false;                       // vacuous when extendable, else spoiler_wins
};

// Precondition: t is a tree with n <= 2^r + 2, all leaves coloured, no
// internal vertex coloured, and fewer than k (coloured) leaves.
SeparatorCheck separator_strategy_check(const PrecoloredGraph &t, int k, int r,
                                        const Budget &budget = default_budget());

} // namespace widthlab
