#include "brittle/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace brittle {

int gf2_rank(BitMatrix m) {
  int rank = 0;
  std::size_t nrows = m.rows.size();
  for (int col = 0; col < m.ncols && rank < static_cast<int>(nrows); ++col) {
    std::uint64_t bit = 1ull << col;
    std::size_t pivot = nrows;
    for (std::size_t r = rank; r < nrows; ++r) {
      if (m.rows[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot == nrows) continue;
    std::swap(m.rows[rank], m.rows[pivot]);
    for (std::size_t r = 0; r < nrows; ++r)
      if (r != static_cast<std::size_t>(rank) && (m.rows[r] & bit)) m.rows[r] ^= m.rows[rank];
    ++rank;
  }
  return rank;
}

BitMatrix submatrix(const BitMatrix& m, const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx) {
  BitMatrix out;
  out.ncols = static_cast<int>(col_idx.size());
  for (int r : row_idx) {
    if (r < 0 || r >= static_cast<int>(m.rows.size()))
      throw std::invalid_argument("row index out of range");
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      int c = col_idx[j];
      if (c < 0 || c >= m.ncols) throw std::invalid_argument("column index out of range");
      if ((m.rows[r] >> c) & 1) row |= 1ull << j;
    }
    out.rows.push_back(row);
  }
  return out;
}

namespace {

void check_subset(const Graph& g, VertexSet s) {
  if (s & ~g.vertex_set()) throw std::invalid_argument("not a vertex subset");
}

int rank_of_rows(std::uint64_t* rows, int nrows) {
  int rank = 0;
  while (nrows > rank) {
    // lowest remaining column with a one in some remaining row
    std::uint64_t any = 0;
    for (int r = rank; r < nrows; ++r) any |= rows[r];
    if (!any) break;
    std::uint64_t bit = any & (~any + 1);
    int pivot = rank;
    while (!(rows[pivot] & bit)) ++pivot;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < nrows; ++r)
      if (rows[r] & bit) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

// Kuhn's augmenting-path maximum matching on the bipartite graph
// [left, right]; allocation-free, recursion depth <= 64.
struct Matcher {
  const Graph* g;
  std::uint64_t right;
  int match_of[64];  // right vertex -> left vertex
  std::uint64_t visited;

  bool augment(int u) {
    std::uint64_t cands = g->adj[u] & right & ~visited;
    while (cands) {
      int w = std::countr_zero(cands);
      cands &= cands - 1;
      visited |= 1ull << w;
      if (match_of[w] == -1 || augment(match_of[w])) {
        match_of[w] = u;
        return true;
      }
    }
    return false;
  }
};

int bipartite_matching(const Graph& g, VertexSet left, VertexSet right) {
  Matcher m;
  m.g = &g;
  m.right = right;
  for (int v = 0; v < g.n; ++v) m.match_of[v] = -1;
  int size = 0;
  for (std::uint64_t s = left; s; s &= s - 1) {
    m.visited = 0;
    if (m.augment(std::countr_zero(s))) ++size;
  }
  return size;
}

}  // namespace

int cutrank(const Graph& g, VertexSet s) {
  check_subset(g, s);
  BitMatrix m;
  m.ncols = g.n;
  VertexSet rest = g.vertex_set() & ~s;
  for (int v : set_to_indices(s)) m.rows.push_back(g.adj[v] & rest);
  return gf2_rank(std::move(m));
}

int edge_boundary(const Graph& g, VertexSet s) {
  check_subset(g, s);
  VertexSet rest = g.vertex_set() & ~s;
  int count = 0;
  for (int v : set_to_indices(s)) count += std::popcount(g.adj[v] & rest);
  return count;
}

int matching_boundary(const Graph& g, VertexSet s) {
  check_subset(g, s);
  return bipartite_matching(g, s, g.vertex_set() & ~s);
}

int vertex_boundary(const Graph& g, const std::vector<std::pair<int, int>>& f) {
  std::vector<std::pair<int, int>> fs;
  for (auto [u, v] : f) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge set contains a non-edge");
    fs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  std::vector<int> fdeg(g.n, 0);
  VertexSet touched = 0;
  for (auto [u, v] : fs) {
    fdeg[u]++;
    fdeg[v]++;
    touched |= (1ull << u) | (1ull << v);
  }
  int count = 0;
  for (int v : set_to_indices(touched))
    if (g.degree(v) > fdeg[v]) ++count;
  return count;
}

std::optional<ConnKind> conn_from_name(const std::string& name) {
  if (name == "vc" || name == "vertex") return ConnKind::VertexCut;
  if (name == "ec" || name == "edge") return ConnKind::EdgeCut;
  if (name == "matc" || name == "matching") return ConnKind::MatchingCut;
  if (name == "cutrank" || name == "rank") return ConnKind::CutRank;
  return std::nullopt;
}

const char* conn_name(ConnKind k) {
  switch (k) {
    case ConnKind::VertexCut: return "vc";
    case ConnKind::EdgeCut: return "ec";
    case ConnKind::MatchingCut: return "matc";
    case ConnKind::CutRank: return "cutrank";
  }
  return "?";
}

int eval(ConnKind kind, const Graph& g, VertexSet s) {
  switch (kind) {
    case ConnKind::EdgeCut: return edge_boundary(g, s);
    case ConnKind::MatchingCut: return matching_boundary(g, s);
    case ConnKind::CutRank: return cutrank(g, s);
    case ConnKind::VertexCut: break;
  }
  throw std::invalid_argument("vc takes an edge set, not a vertex set");
}

int eval(ConnKind kind, const Graph& g, const std::vector<std::pair<int, int>>& f) {
  if (kind != ConnKind::VertexCut)
    throw std::invalid_argument(std::string(conn_name(kind)) + " takes a vertex set, not an edge set");
  return vertex_boundary(g, f);
}

GroundContext GroundContext::make(ConnKind kind, const Graph& g) {
  GroundContext ctx;
  ctx.kind = kind;
  ctx.g = &g;
  if (edge_ground(kind)) {
    ctx.edge_list = g.edges();
    ctx.size = static_cast<int>(ctx.edge_list.size());
    if (ctx.size > 64) throw std::invalid_argument("edge ground set exceeds 64 elements");
    ctx.incident.assign(g.n, 0);
    for (int i = 0; i < ctx.size; ++i) {
      ctx.incident[ctx.edge_list[i].first] |= 1ull << i;
      ctx.incident[ctx.edge_list[i].second] |= 1ull << i;
    }
  } else {
    ctx.size = g.n;
  }
  return ctx;
}

int GroundContext::eval_within(std::uint64_t part, std::uint64_t universe) const {
  std::uint64_t other = universe & ~part;
  const Graph& gr = *g;
  switch (kind) {
    case ConnKind::EdgeCut: {
      int count = 0;
      for (std::uint64_t s = part; s; s &= s - 1)
        count += std::popcount(gr.adj[std::countr_zero(s)] & other);
      return count;
    }
    case ConnKind::CutRank: {
      std::uint64_t rows[64];
      int nrows = 0;
      for (std::uint64_t s = part; s; s &= s - 1)
        rows[nrows++] = gr.adj[std::countr_zero(s)] & other;
      return rank_of_rows(rows, nrows);
    }
    case ConnKind::MatchingCut:
      return bipartite_matching(gr, part, other);
    case ConnKind::VertexCut: {
      int count = 0;
      for (int v = 0; v < gr.n; ++v)
        if ((incident[v] & part) && (incident[v] & other)) ++count;
      return count;
    }
  }
  return 0;
}

std::string GroundContext::element_name(int i) const {
  if (!edge_ground(kind)) return std::to_string(i);
  return std::to_string(edge_list[i].first) + "-" + std::to_string(edge_list[i].second);
}

}  // namespace brittle
