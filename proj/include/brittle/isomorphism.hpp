#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brittle/graph.hpp"

namespace brittle {

/// Canonical relabeling of a graph: `rows` is the adjacency of the
/// lexicographically smallest matrix over all orderings compatible with the
/// refinement search. Two graphs are isomorphic iff their forms compare equal.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> rows;

  bool operator==(const CanonicalForm&) const = default;
  std::string bytes() const;  // hashable key including n
};

CanonicalForm canonical_form(const Graph& g);

/// Iterated color refinement by (color, multiset of neighbor colors),
/// normalized so the color ids are label-invariant. Returns one color per
/// vertex.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors);

/// Edge-preserving bijection a -> b, if one exists. Intended for desk-scale
/// graphs (n up to ~12).
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
bool is_isomorphic(const Graph& a, const Graph& b);

/// Injective map pattern -> host preserving adjacency exactly (edges to
/// edges, non-edges to non-edges).
std::optional<std::vector<int>> find_induced_embedding(const Graph& host, const Graph& pattern);
std::optional<VertexSet> find_induced_pattern(const Graph& host, const Graph& pattern);

/// Monomorphism certificate: pattern edges map to host edges, non-edges
/// unconstrained.
struct SubgraphHit {
  std::vector<int> map;  // pattern vertex -> host vertex
  VertexSet vertices = 0;
  std::vector<std::pair<int, int>> edges;  // images of pattern edges, u < v
};
std::optional<SubgraphHit> find_subgraph_pattern(const Graph& host, const Graph& pattern);

}  // namespace brittle
