#include "brittle/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace brittle {

int popcount(std::uint64_t m) { return std::popcount(m); }

int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

std::vector<int> set_to_indices(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

VertexSet indices_to_set(const std::vector<int>& idx) {
  VertexSet s = 0;
  for (int v : idx) {
    if (v < 0 || v > kMaxVertices) throw std::invalid_argument("vertex index out of range");
    s |= 1ull << v;
  }
  return s;
}

Graph::Graph(int n_) : n(n_) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  if (n_ > kMaxVertices) throw std::invalid_argument("graph exceeds the 63-vertex cap");
  adj.assign(n, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj[u] |= 1ull << v;
  adj[v] |= 1ull << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj[u] &= ~(1ull << v);
  adj[v] &= ~(1ull << u);
}

void Graph::toggle_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj[u] ^= 1ull << v;
  adj[v] ^= 1ull << u;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj[v]);
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += std::popcount(adj[v]);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    std::uint64_t higher = adj[u] & ~full_mask(u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

const std::string& Graph::label(int v) const {
  check_vertex(v);
  static const std::string empty;
  return labels.empty() ? empty : labels[v];
}

void Graph::set_label(int v, std::string s) {
  check_vertex(v);
  if (labels.empty()) labels.assign(n, "");
  labels[v] = std::move(s);
}

// -- families ---------------------------------------------------------------

Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj[v] = full_mask(n) & ~(1ull << v);
  return g;
}

Graph make_star(int leaves) {
  if (leaves < 0) throw std::invalid_argument("negative leaf count");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph make_complete_bipartite(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative side size");
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = m; v < m + n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_empty(int n) { return Graph(n); }

std::optional<FamilyKind> family_from_name(const std::string& name) {
  if (name == "path") return FamilyKind::Path;
  if (name == "complete") return FamilyKind::Complete;
  if (name == "star") return FamilyKind::Star;
  if (name == "complete_bipartite") return FamilyKind::CompleteBipartite;
  if (name == "empty") return FamilyKind::Empty;
  return std::nullopt;
}

Graph make_family(FamilyKind kind, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) throw std::invalid_argument("wrong number of family parameters");
    for (int p : params)
      if (p < 0) throw std::invalid_argument("family parameters must be nonnegative");
  };
  switch (kind) {
    case FamilyKind::Path:
      need(1);
      return make_path(params[0]);
    case FamilyKind::Complete:
      need(1);
      return make_complete(params[0]);
    case FamilyKind::Star:
      need(1);
      return make_star(params[0]);
    case FamilyKind::CompleteBipartite:
      need(2);
      return make_complete_bipartite(params[0], params[1]);
    case FamilyKind::Empty:
      need(1);
      return make_empty(params[0]);
  }
  throw std::invalid_argument("unknown family");
}

// -- composition ------------------------------------------------------------

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.n + h.n > kMaxVertices) throw std::invalid_argument("union exceeds the 63-vertex cap");
  Graph out(g.n + h.n);
  for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
  for (int v = 0; v < h.n; ++v) out.adj[g.n + v] = h.adj[v] << g.n;
  if (g.has_labels() || h.has_labels()) {
    out.labels.assign(out.n, "");
    for (int v = 0; v < g.n; ++v) out.labels[v] = g.label(v);
    for (int v = 0; v < h.n; ++v) out.labels[g.n + v] = h.label(v);
  }
  return out;
}

Graph m_copies(const Graph& h, int m) {
  if (m < 1) throw std::invalid_argument("copy count must be at least 1");
  if (m * h.n > kMaxVertices) throw std::invalid_argument("copies exceed the 63-vertex cap");
  Graph out(m * h.n);
  out.labels.assign(out.n, "");
  for (int c = 0; c < m; ++c) {
    int base = c * h.n;
    for (int v = 0; v < h.n; ++v) {
      out.adj[base + v] = h.adj[v] << base;
      out.labels[base + v] = std::to_string(c) + ":" +
                             (h.has_labels() && !h.label(v).empty() ? h.label(v) : std::to_string(v));
    }
  }
  return out;
}

Graph quotient_family(const QuotientSpec& spec) {
  const Graph& h = spec.base;
  int m = spec.copies;
  VertexSet a = spec.glued;
  if (m < 1) throw std::invalid_argument("copy count must be at least 1");
  if (a & ~h.vertex_set()) throw std::invalid_argument("glued set not a vertex subset");
  if (a == h.vertex_set()) throw std::invalid_argument("glued set must be a proper vertex subset");
  for (int v : set_to_indices(a))
    if (h.adj[v] & a) throw std::invalid_argument("glued set must be independent");

  int na = popcount(a);
  int rest = h.n - na;
  int total = m * rest + na;
  if (total > kMaxVertices) throw std::invalid_argument("quotient exceeds the 63-vertex cap");

  // old index -> (glued slot) or (offset within the non-glued block)
  std::vector<int> glue_slot(h.n, -1), rest_slot(h.n, -1);
  int gi = 0, ri = 0;
  for (int v = 0; v < h.n; ++v) {
    if ((a >> v) & 1)
      glue_slot[v] = gi++;
    else
      rest_slot[v] = ri++;
  }

  Graph out(total);
  out.labels.assign(total, "");
  for (int v = 0; v < h.n; ++v)
    if (glue_slot[v] >= 0) out.labels[glue_slot[v]] = "A";

  auto copy_index = [&](int c, int v) {
    return glue_slot[v] >= 0 ? glue_slot[v] : na + c * rest + rest_slot[v];
  };
  for (int c = 0; c < m; ++c) {
    for (auto [u, v] : h.edges()) out.add_edge(copy_index(c, u), copy_index(c, v));
    for (int v = 0; v < h.n; ++v)
      if (rest_slot[v] >= 0)
        out.labels[copy_index(c, v)] =
            std::to_string(c) + ":" +
            (h.has_labels() && !h.label(v).empty() ? h.label(v) : std::to_string(v));
  }
  return out;
}

std::optional<JoinKind> join_from_name(const std::string& name) {
  if (name == "mat") return JoinKind::Mat;
  if (name == "antimat") return JoinKind::Antimat;
  if (name == "tri") return JoinKind::Tri;
  return std::nullopt;
}

const char* join_name(JoinKind k) {
  switch (k) {
    case JoinKind::Mat: return "mat";
    case JoinKind::Antimat: return "antimat";
    case JoinKind::Tri: return "tri";
  }
  return "?";
}

Graph join(const Graph& g, const Graph& h, JoinKind kind) {
  if (g.n != h.n) throw std::invalid_argument("join requires equal vertex counts");
  Graph out = disjoint_union(g, h);
  int n = g.n;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      bool cross = kind == JoinKind::Mat   ? i == j
                   : kind == JoinKind::Antimat ? i != j
                                               : i >= j;
      if (cross) out.add_edge(i - 1, n + j - 1);
    }
  }
  return out;
}

// -- basic operations -------------------------------------------------------

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen = 0;
  for (int v = 0; v < g.n; ++v) {
    if ((seen >> v) & 1) continue;
    VertexSet comp = 1ull << v;
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (int u : set_to_indices(frontier)) next |= g.adj[u];
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph induced(const Graph& g, VertexSet s) {
  if (s & ~g.vertex_set()) throw std::invalid_argument("not a vertex subset");
  std::vector<int> keep = set_to_indices(s);
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  if (g.has_labels()) {
    out.labels.assign(out.n, "");
    for (std::size_t i = 0; i < keep.size(); ++i) out.labels[i] = g.label(keep[i]);
  }
  return out;
}

DeleteResult delete_vertices(const Graph& g, VertexSet s) {
  if (s & ~g.vertex_set()) throw std::invalid_argument("not a vertex subset");
  DeleteResult res;
  res.graph = induced(g, g.vertex_set() & ~s);
  res.old_to_new.assign(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v)
    if (!((s >> v) & 1)) res.old_to_new[v] = next++;
  return res;
}

Graph delete_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  return delete_vertices(g, 1ull << v).graph;
}

Graph delete_edges(const Graph& g, const std::vector<std::pair<int, int>>& f) {
  Graph out = g;
  for (auto [u, v] : f) {
    out.check_vertex(u);
    out.check_vertex(v);
    if (!out.has_edge(u, v)) throw std::invalid_argument("edge set contains a non-edge");
    out.remove_edge(u, v);
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out = g;
  for (int v = 0; v < g.n; ++v) out.adj[v] = ~g.adj[v] & g.vertex_set() & ~(1ull << v);
  return out;
}

}  // namespace brittle
