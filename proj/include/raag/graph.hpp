#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raag {

using VertexId = int;

/// Set of vertices of a defining graph, bit i standing for vertex i.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(VertexId v) { return VertexMask{1} << v; }
inline constexpr bool has(VertexMask m, VertexId v) { return (m >> v) & 1u; }
int popcount(VertexMask m);
std::vector<VertexId> members(VertexMask m);

/// Raised for malformed graph files and simpliciality violations.
/// line/column are 1-based; 0 when the error is not tied to a position.
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Finite simplicial graph with named vertices. Vertex ids are dense and
/// follow declaration order.
class DefiningGraph {
 public:
  DefiningGraph() = default;
  DefiningGraph(std::vector<std::string> names,
                const std::vector<std::pair<VertexId, VertexId>>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId index_of(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const { return has(adjacency_[u], v); }
  VertexMask neighbors(VertexId v) const { return adjacency_.at(v); }
  VertexMask all() const;
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  std::string format_set(VertexMask m) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<VertexMask> adjacency_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

DefiningGraph parse_graph(std::string_view text);
DefiningGraph load_graph(const std::string& path);

bool is_connected(const DefiningGraph& g, VertexMask s);
bool is_triangle_free(const DefiningGraph& g);

/// n when g is homogeneous of dimension n, nothing otherwise.
std::optional<int> homogeneity_dimension(const DefiningGraph& g);
std::optional<int> homogeneity_dimension(const DefiningGraph& g, VertexMask s);

struct LinkStar {
  VertexMask link = 0;
  VertexMask star = 0;
};
LinkStar link_star(const DefiningGraph& g, VertexId v);

struct JoinDecomposition {
  std::vector<VertexMask> factors;
  bool is_maximal = true;
};

/// Maximal join decomposition of the full subgraph on s. The factors are the
/// connected components of the complement graph on s, ordered by least vertex.
JoinDecomposition max_join_decomposition(const DefiningGraph& g, VertexMask s);

}  // namespace raag
