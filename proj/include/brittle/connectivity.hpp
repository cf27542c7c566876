#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brittle/graph.hpp"

namespace brittle {

/// 0-1 matrix with up to 64 columns, one machine word per row.
struct BitMatrix {
  std::vector<std::uint64_t> rows;
  int ncols = 0;
};

/// Rank over GF(2) by in-place elimination, pivoting on the lowest column
/// index first.
int gf2_rank(BitMatrix m);

BitMatrix submatrix(const BitMatrix& m, const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx);

// The four connectivity functions. All are symmetric in X versus its
// complement in the ground set.
//
//   vertex_boundary (vc):   F subset of E(G); vertices meeting both F and E\F
//   edge_boundary (ec):     S subset of V(G); edges crossing S and V\S
//   matching_boundary:      maximum matching of the crossing bipartite graph
//   cutrank:                GF(2) rank of the S x (V\S) bi-adjacency matrix

int cutrank(const Graph& g, VertexSet s);
int edge_boundary(const Graph& g, VertexSet s);
int matching_boundary(const Graph& g, VertexSet s);
int vertex_boundary(const Graph& g, const std::vector<std::pair<int, int>>& f);

enum class ConnKind { VertexCut, EdgeCut, MatchingCut, CutRank };

/// The ground set of VertexCut is E(G); the other three live on V(G).
constexpr bool edge_ground(ConnKind k) { return k == ConnKind::VertexCut; }

std::optional<ConnKind> conn_from_name(const std::string& name);
const char* conn_name(ConnKind k);

/// Dispatch for the three vertex-ground functions; VertexCut here is a
/// contract violation.
int eval(ConnKind kind, const Graph& g, VertexSet s);
/// Dispatch for the edge-ground function; the vertex-ground kinds here are a
/// contract violation.
int eval(ConnKind kind, const Graph& g, const std::vector<std::pair<int, int>>& f);

/// A connectivity function bound to one graph, with its ground set indexed
/// 0..size-1 (vertex indices, or edges in (u<v, lexicographic) order) so
/// partition solvers can work on plain masks.
struct GroundContext {
  ConnKind kind;
  const Graph* g = nullptr;
  int size = 0;
  std::vector<std::pair<int, int>> edge_list;  // edge-ground only
  std::vector<std::uint64_t> incident;         // edge-ground: per-vertex incident-edge mask

  static GroundContext make(ConnKind kind, const Graph& g);

  std::uint64_t full() const { return full_mask(size); }
  int eval_mask(std::uint64_t part) const { return eval_within(part, full()); }

  /// f restricted to the sub-instance spanned by `universe`: both sides of
  /// the cut are intersected with it. For every fixed part this value is
  /// monotone in `universe`, which is what the solver's pruning relies on.
  int eval_within(std::uint64_t part, std::uint64_t universe) const;

  std::string element_name(int i) const;  // "v" or "u-v"
};

}  // namespace brittle
