#include "rx3/graph_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "rx3/errors.hpp"

namespace rx3 {

using nlohmann::json;

Graph read_graph_text(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw InputError("graph text: expected header \"n m\"");
  if (n < 1) throw InputError("graph text: n must be positive");
  if (m < 0) throw InputError("graph text: m must be non-negative");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw InputError("graph text: expected " + std::to_string(m) + " edge lines, read " +
                       std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("graph text: edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::string trailing;
  if (in >> trailing) throw InputError("graph text: unexpected trailing token '" + trailing + "'");
  return Graph(static_cast<int>(n), edges);
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw InputError("graph json: expected an object with fields \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer()) throw InputError("graph json: \"n\" must be an integer");
  if (!doc["edges"].is_array()) throw InputError("graph json: \"edges\" must be a list");
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > 1'000'000) throw InputError("graph json: n out of range");
  std::vector<Edge> edges;
  for (const json& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw InputError("graph json: every edge must be a 2-element integer list, got " +
                       pair.dump());
    }
    const auto u = pair[0].get<long long>();
    const auto v = pair[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("graph json: edge " + pair.dump() + " out of range");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("graph json: ") + e.what());
    }
    return graph_from_json(doc);
  }
  std::istringstream in(text);
  return read_graph_text(in);
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << contents;
}

}  // namespace

Graph load_graph(const std::filesystem::path& path) { return parse_graph(slurp(path)); }

void save_graph(const std::filesystem::path& path, const Graph& g) {
  if (path.extension() == ".json") {
    write_file(path, graph_to_json(g).dump() + "\n");
  } else {
    std::ostringstream out;
    write_graph_text(out, g);
    write_file(path, out.str());
  }
}

json coloring_to_json(const Graph& g, const EdgeColoring& coloring) {
  coloring.check_host(g);
  json records = json::array();
  for (int id = 0; id < g.size(); ++id) {
    const Edge e = g.edges()[id];
    records.push_back({{"u", e.u}, {"v", e.v}, {"c", coloring[id]}});
  }
  return {{"colors", std::move(records)}};
}

EdgeColoring coloring_from_json(const Graph& g, const json& doc) {
  if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_array()) {
    throw InputError("coloring json: expected an object with a \"colors\" list");
  }
  std::vector<Color> colors(g.size(), 0);
  for (const json& rec : doc["colors"]) {
    if (!rec.is_object() || !rec.contains("u") || !rec.contains("v") || !rec.contains("c") ||
        !rec["u"].is_number_integer() || !rec["v"].is_number_integer() ||
        !rec["c"].is_number_integer()) {
      throw InputError("coloring json: malformed record " + rec.dump());
    }
    const auto u = rec["u"].get<long long>();
    const auto v = rec["v"].get<long long>();
    const auto c = rec["c"].get<long long>();
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v ||
        g.edge_id(static_cast<int>(u), static_cast<int>(v)) < 0) {
      throw InputError("coloring json: record " + rec.dump() + " names no edge of the graph");
    }
    if (c < 1 || c > std::numeric_limits<int>::max()) {
      throw InputError("coloring json: color must be >= 1 in " + rec.dump());
    }
    const int id = g.edge_id(static_cast<int>(u), static_cast<int>(v));
    if (colors[id] != 0) throw InputError("coloring json: edge listed twice in " + rec.dump());
    colors[id] = static_cast<Color>(c);
  }
  for (int id = 0; id < g.size(); ++id) {
    if (colors[id] == 0) {
      const Edge e = g.edges()[id];
      throw InputError("coloring json: edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has no color");
    }
  }
  return EdgeColoring(g, std::move(colors));
}

EdgeColoring load_coloring(const std::filesystem::path& path, const Graph& g) {
  json doc;
  try {
    doc = json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("coloring json: ") + e.what());
  }
  return coloring_from_json(g, doc);
}

void save_coloring(const std::filesystem::path& path, const Graph& g,
                   const EdgeColoring& coloring) {
  write_file(path, coloring_to_json(g, coloring).dump() + "\n");
}

}  // namespace rx3
