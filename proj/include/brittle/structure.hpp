#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "brittle/graph.hpp"

namespace brittle {

/// A Tutte bridge of A: the subgraph spanned by one equivalence class of
/// edges, where edges are related when a path joins them with no internal
/// vertex in A. Every class is either a single edge inside A or a component
/// C of G-A together with all edges from C to A. Bridge edge sets partition
/// E(G); isolated vertices of G-A span no edges and form no bridge.
struct Bridge {
  VertexSet vertices = 0;
  std::vector<std::pair<int, int>> edges;  // u < v
  VertexSet attachments = 0;               // vertices in A
};

std::vector<Bridge> tutte_bridges(const Graph& g, VertexSet a);

/// Removes every bridge of A spanning at most max_edges edges: its edges go
/// away and so do its vertices outside A. Remaining vertices are reindexed
/// densely (A vertices are always kept).
Graph delete_bridges(const Graph& g, VertexSet a, int max_edges);

/// Sets whose pairwise intersections all equal the core.
struct Sunflower {
  std::vector<int> core;
  std::vector<int> petals;  // indices into the family
};

/// Exhaustive search over candidate cores (pairwise intersections and the
/// empty set). Family members are arbitrary finite int sets; duplicates in
/// the family are treated as one set.
std::optional<Sunflower> find_sunflower(const std::vector<std::vector<int>>& family, int petals);
bool check_sunflower(const std::vector<std::vector<int>>& family, const Sunflower& s);

/// Total edge coloring of a complete graph on `n` vertices.
struct EdgeColoring {
  int n = 0;
  std::vector<std::vector<int>> color;  // full symmetric matrix, diagonal ignored

  static EdgeColoring uniform(int n, int c);
  int at(int u, int v) const { return color[u][v]; }
  void set(int u, int v, int c);
};

struct MonoClique {
  std::vector<int> vertices;
  int color = 0;
};

/// Exact search for n pairwise like-colored vertices; absent only when no
/// color class contains a clique of that size.
std::optional<MonoClique> find_mono_clique(const EdgeColoring& c, int n);

/// Witness that the cross-edges between ordered tuples match one of the
/// three canonical bipartite patterns (matching, half-graph, or complement
/// of a matching).
struct TrichotomyHit {
  std::vector<int> s_order;
  std::vector<int> t_order;
  JoinKind kind = JoinKind::Mat;
};

/// Searches n-subsets S' of S and T' of T whose cross-pattern in g equals
/// the `kind` pattern under the returned orders. Only cross-edges matter;
/// edges inside S or T are ignored. Finds a certificate whenever one
/// exists (exhaustive over subsets at desk scale).
std::optional<TrichotomyHit> bipartite_trichotomy(const Graph& g, VertexSet s, VertexSet t, int n);
bool check_trichotomy(const Graph& g, const TrichotomyHit& hit);

/// True when two vertices of s have the same neighborhood inside t.
bool has_twins_towards(const Graph& g, VertexSet s, VertexSet t);

/// A vertex of degree at least k, or an induced path on l vertices, or
/// neither.
struct DegreeOrPath {
  enum Kind { HighDegree, Path, Absent } kind = Absent;
  int vertex = -1;
  std::vector<int> path;
};

DegreeOrPath degree_or_path(const Graph& g, int k, int l);

}  // namespace brittle
