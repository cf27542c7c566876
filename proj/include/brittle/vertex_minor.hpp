#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brittle/graph.hpp"

namespace brittle {

/// Complements the subgraph induced on the neighborhood of v.
Graph local_complement(const Graph& g, int v);

/// Pivot on the edge uv: flips the adjacency between every pair of vertices
/// lying in distinct classes of N(u)\(N(v)+v), N(v)\(N(u)+u), N(u)&N(v),
/// then swaps the rows of u and v. Equals three local complementations
/// u,v,u; the composition lives in the tests as an independent cross-check.
/// Labels stay attached to vertex indices.
Graph pivot(const Graph& g, int u, int v);

/// One step of a reduction word. Vertex indices refer to the graph at
/// application time; deletions reindex the remaining vertices densely.
struct LCOp {
  enum Kind { Lc, Pivot, Del } kind = Lc;
  int u = -1;
  int v = -1;  // Pivot only
};

struct LCWord {
  std::vector<LCOp> ops;
};

Graph apply_word(const Graph& g, const LCWord& word);
/// Text form: tokens "lc v", "pv u v", "del v" separated by "; ".
std::string word_to_string(const LCWord& word);
LCWord word_from_string(const std::string& text);

/// Default cap on explored search states; the BRITTLE_STATE_LIMIT
/// environment variable overrides it.
std::size_t default_state_limit();

enum class SearchStatus { Found, Absent, Inconclusive };

/// Closure of g under local complementation. States are deduplicated by
/// exact labeled adjacency for n < 8 and by canonical form from n = 8 up.
struct Orbit {
  std::vector<Graph> graphs;
  bool limit_hit = false;
};
Orbit orbit(const Graph& g, std::size_t limit = 0);  // 0 = default limit

/// Early-exit test whether some graph locally equivalent to g is isomorphic
/// to h. Found is certified; Absent means the orbit closed without a hit.
SearchStatus orbit_contains(const Graph& g, const Graph& h, std::size_t limit = 0);

/// BFS over local complementations and vertex deletions, testing each state
/// for an induced copy of h. A returned word transforms g into a graph
/// isomorphic to h (trailing deletions prune the state down to the copy).
/// Deletion successors are enqueued after complementation successors, so
/// witnesses prefer fewer deletions.
struct VertexMinorResult {
  SearchStatus status = SearchStatus::Absent;
  LCWord word;              // valid when status == Found
  std::size_t states = 0;   // states explored
};
VertexMinorResult has_vertex_minor(const Graph& g, const Graph& h, std::size_t limit = 0);

/// The named reduction recipes on the three joins. Executing `word` on
/// `input` yields a graph isomorphic to `target`; when a mid-word
/// `checkpoint` is present, the state after that many ops is isomorphic to
/// the checkpoint graph.
enum class ConstructionName { MatKS, MatKK, AntimatSS, AntimatKS, AntimatKK, TriKK };
std::optional<ConstructionName> construction_from_name(const std::string& name);
const char* construction_name(ConstructionName c);

struct Construction {
  Graph input;
  LCWord word;
  Graph target;
  std::optional<std::pair<std::size_t, Graph>> checkpoint;  // (#ops, expected)
};
Construction construction(ConstructionName name, int n);

}  // namespace brittle
