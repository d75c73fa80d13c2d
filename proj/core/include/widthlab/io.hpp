#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

enum class InstanceFormat { dimacs, json };

struct Instance {
    PrecoloredGraph precolored;
    bool has_colors = false;
};

// DIMACS .col ("c" comments, "p edge n m", "e u v" 1-based) or this tool's
// JSON instance format ({"n", "edges", "colors"?}, 0-based).
Instance parse_instance(std::istream &in, InstanceFormat format, const std::string &source);
Instance parse_instance(const std::string &text, InstanceFormat format, const std::string &source);

// Format chosen by extension (.col/.dimacs vs .json) unless overridden.
Instance load_instance(const std::filesystem::path &path,
                       std::optional<InstanceFormat> format = std::nullopt);

std::string serialize_dimacs(const Graph &g);
std::string serialize_instance_json(const PrecoloredGraph &p);

// 128-bit FNV-1a rendered as 32 hex characters.
std::string digest_hex(std::string_view bytes);

// Content digest of an instance: canonical form when it fits the canonical
// size cap, the literal sorted-edge encoding beyond it.
std::string instance_digest(const PrecoloredGraph &p, const Budget &budget = default_budget());

} // namespace widthlab
