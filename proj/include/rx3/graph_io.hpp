#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "rx3/coloring.hpp"
#include "rx3/graph.hpp"

namespace rx3 {

// Text graph format: first line "n m", then m lines "u v" (0-based).
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

// Structured graph format: {"n": <int>, "edges": [[u, v], ...]}.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& doc);

/// Reads either format; JSON is detected by a leading '{'.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::filesystem::path& path);

/// Writes JSON when the extension is ".json", text otherwise.
void save_graph(const std::filesystem::path& path, const Graph& g);

// Coloring format: {"colors": [{"u": .., "v": .., "c": ..}, ...]}, one record
// per edge of the graph, pairs matched without orientation.
nlohmann::json coloring_to_json(const Graph& g, const EdgeColoring& coloring);
EdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& doc);
EdgeColoring load_coloring(const std::filesystem::path& path, const Graph& g);
void save_coloring(const std::filesystem::path& path, const Graph& g,
                   const EdgeColoring& coloring);

}  // namespace rx3
