#include "pseudoham/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pseudoham/error.hpp"

namespace pseudoham {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

std::optional<std::size_t> prefix_split(const Graph& g) {
  if (!g.has_bipartition()) return std::nullopt;
  const auto& sides = *g.bipartition();
  std::size_t k = 0;
  while (k < sides.size() && sides[k] == 0) ++k;
  for (std::size_t i = k; i < sides.size(); ++i)
    if (sides[i] != 1) return std::nullopt;
  return k;
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  auto p = path;
  p += ".json";
  return p;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header line");
  ++line_no;
  const auto header = split_tokens(line);
  if (header.size() != 2 && header.size() != 4)
    throw ParseError(line_no, "header must be 'n m' or 'n m bipartite k'");
  const std::size_t n = parse_index(header[0], line_no, "vertex count");
  const std::size_t m = parse_index(header[1], line_no, "edge count");
  if (n > Graph::kMaxVertices)
    throw ParseError(line_no, "vertex count " + std::to_string(n) + " exceeds cap");
  std::optional<std::vector<std::uint8_t>> sides;
  if (header.size() == 4) {
    if (header[2] != "bipartite") throw ParseError(line_no, "expected 'bipartite' in header");
    const std::size_t k = parse_index(header[3], line_no, "side size");
    if (k > n) throw ParseError(line_no, "side size exceeds vertex count");
    sides.emplace(n, 1);
    for (std::size_t i = 0; i < k; ++i) (*sides)[i] = 0;
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = split_tokens(line);
    if (tok.empty()) {
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(line_no, "blank line");
    }
    if (tok.size() != 2) throw ParseError(line_no, "edge line must have exactly two indices");
    const std::size_t u = parse_index(tok[0], line_no, "vertex index");
    const std::size_t v = parse_index(tok[1], line_no, "vertex index");
    if (u >= n || v >= n) throw ParseError(line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const Edge e = Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)}.canonical();
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    if (sides && (*sides)[u] == (*sides)[v]) throw ParseError(line_no, "edge inside one side of the bipartition");
    edges.push_back(e);
  }
  if (edges.size() != m)
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges but file has " +
                                  std::to_string(edges.size()));
  return Graph(n, edges, std::move(sides));
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.size();
  if (const auto k = prefix_split(g)) out << " bipartite " << *k;
  out << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_edge_list(g, out);
}

bool needs_sidecar(const Graph& g) {
  return !g.labels().empty() || (g.has_bipartition() && !prefix_split(g));
}

std::string sidecar_json(const Graph& g) {
  nlohmann::json doc = nlohmann::json::object();
  nlohmann::json labels = nlohmann::json::object();
  for (std::size_t v = 0; v < g.labels().size(); ++v) labels[std::to_string(v)] = g.labels()[v];
  doc["labels"] = labels;
  if (g.has_bipartition()) doc["bipartition"] = *g.bipartition();
  return doc.dump(2) + "\n";
}

void write_sidecar(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << sidecar_json(g);
}

Graph apply_sidecar(const Graph& g, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("sidecar: ") + e.what());
  }
  Graph out = g;
  if (doc.contains("bipartition")) {
    std::vector<std::uint8_t> sides;
    for (const auto& s : doc.at("bipartition")) sides.push_back(s.get<std::uint8_t>());
    out = out.with_bipartition(std::move(sides));
  }
  if (doc.contains("labels") && !doc.at("labels").empty()) {
    std::vector<std::string> labels(g.order());
    for (const auto& [key, value] : doc.at("labels").items()) {
      const std::size_t v = parse_index(key, 0, "label key");
      if (v >= g.order()) throw ParseError(0, "sidecar label for out-of-range vertex " + key);
      labels[v] = value.get<std::string>();
    }
    out = out.with_labels(std::move(labels));
  }
  return out;
}

Graph load_graph(const std::filesystem::path& path) {
  Graph g = read_edge_list(path);
  const auto side = sidecar_path(path);
  if (std::filesystem::exists(side)) {
    std::ifstream in(side);
    std::stringstream buf;
    buf << in.rdbuf();
    g = apply_sidecar(g, buf.str());
  }
  return g;
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  write_edge_list(g, path);
  if (needs_sidecar(g)) write_sidecar(g, sidecar_path(path));
}

}  // namespace pseudoham
