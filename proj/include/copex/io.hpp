#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "copex/family.hpp"
#include "copex/rgraph.hpp"

namespace copex {

// Text graph format: a header line "r n m" followed by m lines of r
// space-separated 0-based vertex indices. Lines starting with '#' and blank
// lines are skipped. Edges are written in their stored (lexicographic)
// order.
void write_graph(std::ostream& os, const RGraph& g);
std::string graph_to_text(const RGraph& g);

// Reads one graph; returns nullopt at end of stream. Throws
// std::runtime_error on malformed input.
std::optional<RGraph> read_graph(std::istream& is);

RGraph graph_from_text(const std::string& text);

// Family JSON: {"r": int, "members": [{"name": str?, "n": int,
// "edges": [[int,...],...]}, ...]}, edges in canonical order.
nlohmann::json family_to_json(const Family& fam);
Family family_from_json(const nlohmann::json& j);

Family load_family_file(const std::string& path);
void save_family_file(const std::string& path, const Family& fam);

// Reads a graph argument for the CLI: a named construction, a file path, or
// "-" for stdin.
RGraph load_graph_arg(const std::string& arg);

}  // namespace copex
