#include "raag/graph.hpp"

#include <bit>
#include <fstream>
#include <set>
#include <sstream>

namespace raag {

int popcount(VertexMask m) { return std::popcount(m); }

std::vector<VertexId> members(VertexMask m) {
  std::vector<VertexId> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

GraphError::GraphError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + what
                                  : what),
      line_(line),
      column_(column) {}

DefiningGraph::DefiningGraph(std::vector<std::string> names,
                             const std::vector<std::pair<VertexId, VertexId>>& edges)
    : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVertices))
    throw GraphError("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw GraphError("empty vertex name");
    if (!index_.emplace(names_[i], static_cast<VertexId>(i)).second)
      throw GraphError("duplicate vertex '" + names_[i] + "'");
  }
  adjacency_.assign(names_.size(), 0);
  const int n = vertex_count();
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("loop at '" + names_[u] + "' (edge " + names_[u] + " " + names_[u] + ")");
    if (has(adjacency_[u], v))
      throw GraphError("duplicate edge " + names_[u] + " " + names_[v]);
    adjacency_[u] |= bit(v);
    adjacency_[v] |= bit(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
}

std::optional<VertexId> DefiningGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId DefiningGraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw GraphError("unknown vertex '" + std::string(name) + "'");
}

VertexMask DefiningGraph::all() const {
  const int n = vertex_count();
  return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

std::string DefiningGraph::format_set(VertexMask m) const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : members(m)) {
    if (!first) out += ",";
    out += names_[v];
    first = false;
  }
  return out + "}";
}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

}  // namespace

DefiningGraph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::set<std::string> declared;
  struct PendingEdge {
    Token a, b;
    int line;
  };
  std::vector<PendingEdge> pending;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto& kw = tokens.front();
    if (kw.text == "vertices") {
      if (tokens.size() < 2) throw GraphError("'vertices' needs at least one name", line_no, kw.column);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!declared.insert(tokens[i].text).second)
          throw GraphError("vertex '" + tokens[i].text + "' declared twice", line_no, tokens[i].column);
        names.push_back(tokens[i].text);
      }
    } else if (kw.text == "edge") {
      if (tokens.size() != 3)
        throw GraphError("'edge' takes exactly two vertex names", line_no, kw.column);
      pending.push_back({tokens[1], tokens[2], line_no});
    } else {
      throw GraphError("unknown directive '" + kw.text + "'", line_no, kw.column);
    }
    if (end == text.size()) break;
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  auto lookup = [&](const Token& t, int line) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == t.text) return static_cast<VertexId>(i);
    throw GraphError("unknown vertex '" + t.text + "' in edge", line, t.column);
  };
  for (const auto& e : pending) {
    VertexId u = lookup(e.a, e.line);
    VertexId v = lookup(e.b, e.line);
    if (u == v) throw GraphError("loop edge " + e.a.text + " " + e.b.text, e.line, e.a.column);
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw GraphError("duplicate edge " + e.a.text + " " + e.b.text, e.line, e.a.column);
    edges.emplace_back(u, v);
  }
  return DefiningGraph(std::move(names), edges);
}

DefiningGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const GraphError& e) {
    throw GraphError(path + ": " + e.what());
  }
}

bool is_connected(const DefiningGraph& g, VertexMask s) {
  if (s == 0) return false;
  VertexMask seen = s & (~s + 1);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexId v : members(frontier)) next |= g.neighbors(v) & s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

bool is_triangle_free(const DefiningGraph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbors(u) & g.neighbors(v)) return false;
  return true;
}

std::optional<int> homogeneity_dimension(const DefiningGraph& g, VertexMask s) {
  if (s == 0) return std::nullopt;
  bool discrete = true;
  for (VertexId v : members(s))
    if (g.neighbors(v) & s) discrete = false;
  if (discrete) return 1;
  if (!is_connected(g, s)) return std::nullopt;
  std::optional<int> link_dim;
  for (VertexId v : members(s)) {
    auto d = homogeneity_dimension(g, g.neighbors(v) & s);
    if (!d) return std::nullopt;
    if (link_dim && *link_dim != *d) return std::nullopt;
    link_dim = d;
  }
  return *link_dim + 1;
}

std::optional<int> homogeneity_dimension(const DefiningGraph& g) {
  return homogeneity_dimension(g, g.all());
}

LinkStar link_star(const DefiningGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError("unknown vertex index " + std::to_string(v));
  return {g.neighbors(v), g.neighbors(v) | bit(v)};
}

JoinDecomposition max_join_decomposition(const DefiningGraph& g, VertexMask s) {
  if (s == 0) throw GraphError("join decomposition of an empty vertex set");
  if (s & ~g.all()) throw GraphError("vertex set not contained in the graph");
  JoinDecomposition out;
  VertexMask remaining = s;
  while (remaining) {
    VertexMask comp = remaining & (~remaining + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexId v : members(frontier)) next |= s & ~g.neighbors(v) & ~bit(v);
      frontier = next & ~comp;
      comp |= next;
    }
    out.factors.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

}  // namespace raag
