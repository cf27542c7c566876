#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brittle {

/// Hard cap on vertex count: vertex sets are single machine words.
inline constexpr int kMaxVertices = 63;

/// Subset of {0..n-1}, one bit per vertex.
using VertexSet = std::uint64_t;

inline std::uint64_t full_mask(int n) {
  return n == 0 ? 0ull : (~0ull >> (64 - n));
}

int popcount(std::uint64_t m);
int lowest_bit(std::uint64_t m);
std::vector<int> set_to_indices(VertexSet s);
VertexSet indices_to_set(const std::vector<int>& idx);

/// Simple undirected graph on vertices 0..n-1, adjacency as bit rows.
/// Invariants: adj[u] bit v == adj[v] bit u, diagonal zero, n <= 63.
/// Optional per-vertex string labels track provenance through family
/// constructions; operations that permute adjacency leave labels attached
/// to vertex indices.
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::vector<std::string> labels;  // empty, or size n

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  int degree(int v) const;
  VertexSet neighbors(int v) const { return adj[v]; }
  VertexSet vertex_set() const { return full_mask(n); }

  int edge_count() const;
  /// Edges as (u,v) pairs with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  bool has_labels() const { return !labels.empty(); }
  const std::string& label(int v) const;
  void set_label(int v, std::string s);

  bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }

  void check_vertex(int v) const;
};

// -- canonical families -----------------------------------------------------
//
// Vertex orders are fixed because the join operations depend on them:
//   path:               0-1-...-(n-1)
//   complete:           all pairs
//   star (n leaves):    center 0, leaves 1..n
//   complete_bipartite: left side 0..m-1, right side m..m+n-1
//   empty:              n isolated vertices

Graph make_path(int n);
Graph make_complete(int n);
Graph make_star(int leaves);
Graph make_complete_bipartite(int m, int n);
Graph make_empty(int n);

enum class FamilyKind { Path, Complete, Star, CompleteBipartite, Empty };
std::optional<FamilyKind> family_from_name(const std::string& name);
Graph make_family(FamilyKind kind, const std::vector<int>& params);

// -- composition ------------------------------------------------------------

Graph disjoint_union(const Graph& g, const Graph& h);

/// m disjoint copies of h; copy i occupies indices [i*h.n, (i+1)*h.n).
Graph m_copies(const Graph& h, int m);

/// m copies of `base` with the copies of each vertex in the independent set
/// `glued` identified into one vertex. Glued vertices come first (indices
/// 0..|glued|-1, increasing original index) and carry label "A"; copy i of the
/// rest occupies the next contiguous block.
struct QuotientSpec {
  Graph base;
  int copies = 1;
  VertexSet glued = 0;
};
Graph quotient_family(const QuotientSpec& spec);

/// Cross-edge rules between equal-order graphs, 1-based positions i on the
/// g side and j on the h side: Mat i==j, Antimat i!=j, Tri i>=j.
enum class JoinKind { Mat, Antimat, Tri };
std::optional<JoinKind> join_from_name(const std::string& name);
const char* join_name(JoinKind k);
Graph join(const Graph& g, const Graph& h, JoinKind kind);

// -- basic operations -------------------------------------------------------

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Induced subgraph on s; vertices reindexed by increasing original index.
Graph induced(const Graph& g, VertexSet s);

struct DeleteResult {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for removed vertices
};
DeleteResult delete_vertices(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);
Graph delete_edges(const Graph& g, const std::vector<std::pair<int, int>>& f);
Graph complement(const Graph& g);

}  // namespace brittle
