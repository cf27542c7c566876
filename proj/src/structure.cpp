#include "brittle/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace brittle {

namespace {

// components of G-A, reported as vertex sets in g's own index space
std::vector<VertexSet> components_avoiding(const Graph& g, VertexSet a) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertex_set() & ~a;
  VertexSet seen = 0;
  for (int v = 0; v < g.n; ++v) {
    if (!((rest >> v) & 1) || ((seen >> v) & 1)) continue;
    VertexSet comp = 1ull << v;
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (std::uint64_t s = frontier; s; s &= s - 1) next |= g.adj[lowest_bit(s)];
      frontier = next & rest & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

}  // namespace

std::vector<Bridge> tutte_bridges(const Graph& g, VertexSet a) {
  if (a & ~g.vertex_set()) throw std::invalid_argument("not a vertex subset");
  std::vector<Bridge> out;
  // edges with both ends in A are singleton bridges
  for (auto [u, v] : g.edges()) {
    if (((a >> u) & 1) && ((a >> v) & 1)) {
      Bridge b;
      b.vertices = (1ull << u) | (1ull << v);
      b.edges = {{u, v}};
      b.attachments = b.vertices;
      out.push_back(std::move(b));
    }
  }
  // one bridge per component of G-A, spanning its edges plus the edges to A
  for (VertexSet comp : components_avoiding(g, a)) {
    Bridge b;
    b.vertices = comp;
    for (std::uint64_t s = comp; s; s &= s - 1) {
      int u = lowest_bit(s);
      for (std::uint64_t t = g.adj[u] & (comp | a); t; t &= t - 1) {
        int v = lowest_bit(t);
        if (((comp >> v) & 1) && v < u) continue;  // inside edges once
        b.edges.emplace_back(std::min(u, v), std::max(u, v));
        b.vertices |= 1ull << v;
      }
    }
    if (b.edges.empty()) continue;  // isolated component spans no bridge
    std::sort(b.edges.begin(), b.edges.end());
    b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
    b.attachments = b.vertices & a;
    out.push_back(std::move(b));
  }
  return out;
}

Graph delete_bridges(const Graph& g, VertexSet a, int max_edges) {
  Graph stripped = g;
  VertexSet drop = 0;
  for (const Bridge& b : tutte_bridges(g, a)) {
    if (static_cast<int>(b.edges.size()) > max_edges) continue;
    for (auto [u, v] : b.edges) stripped.remove_edge(u, v);
    drop |= b.vertices & ~a;
  }
  return delete_vertices(stripped, drop).graph;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool pick_petals(const std::vector<std::vector<int>>& sets, const std::vector<int>& core,
                 const std::vector<int>& candidates, std::size_t need, std::size_t from,
                 std::vector<int>& chosen, std::vector<int>& residual_union) {
  if (chosen.size() == need) return true;
  for (std::size_t i = from; i < candidates.size(); ++i) {
    int idx = candidates[i];
    std::vector<int> residual;
    std::set_difference(sets[idx].begin(), sets[idx].end(), core.begin(), core.end(),
                        std::back_inserter(residual));
    if (!intersect(residual, residual_union).empty()) continue;
    std::size_t added = residual.size();
    chosen.push_back(idx);
    residual_union.insert(residual_union.end(), residual.begin(), residual.end());
    std::sort(residual_union.begin(), residual_union.end());
    if (pick_petals(sets, core, candidates, need, i + 1, chosen, residual_union)) return true;
    chosen.pop_back();
    // rebuild the union without this residual
    std::vector<int> rebuilt;
    for (int j : chosen) {
      std::vector<int> r;
      std::set_difference(sets[j].begin(), sets[j].end(), core.begin(), core.end(),
                          std::back_inserter(r));
      rebuilt.insert(rebuilt.end(), r.begin(), r.end());
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    residual_union = std::move(rebuilt);
    (void)added;
  }
  return false;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const std::vector<std::vector<int>>& family, int petals) {
  if (petals < 1) throw std::invalid_argument("petal count must be at least 1");
  // normalize and drop duplicate sets, remembering original indices
  std::vector<std::vector<int>> sets;
  std::vector<int> original;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto s = sorted_unique(family[i]);
    if (seen.insert(s).second) {
      sets.push_back(std::move(s));
      original.push_back(static_cast<int>(i));
    }
  }
  // candidate cores: the empty set plus every pairwise intersection (the
  // core of a sunflower with >= 2 petals is the intersection of any two)
  std::set<std::vector<int>> cores;
  cores.insert({});
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) cores.insert(intersect(sets[i], sets[j]));

  for (const auto& core : cores) {
    std::vector<int> candidates;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (std::includes(sets[i].begin(), sets[i].end(), core.begin(), core.end()))
        candidates.push_back(static_cast<int>(i));
    if (static_cast<int>(candidates.size()) < petals) continue;
    std::vector<int> chosen, residual_union;
    if (pick_petals(sets, core, candidates, static_cast<std::size_t>(petals), 0, chosen,
                    residual_union)) {
      Sunflower s;
      s.core = core;
      for (int idx : chosen) s.petals.push_back(original[idx]);
      return s;
    }
  }
  return std::nullopt;
}

bool check_sunflower(const std::vector<std::vector<int>>& family, const Sunflower& s) {
  std::vector<std::vector<int>> petals;
  for (int idx : s.petals) {
    if (idx < 0 || idx >= static_cast<int>(family.size())) return false;
    petals.push_back(sorted_unique(family[idx]));
  }
  auto core = sorted_unique(s.core);
  for (std::size_t i = 0; i < petals.size(); ++i)
    for (std::size_t j = i + 1; j < petals.size(); ++j)
      if (intersect(petals[i], petals[j]) != core) return false;
  return true;
}

EdgeColoring EdgeColoring::uniform(int n, int c) {
  EdgeColoring out;
  out.n = n;
  out.color.assign(n, std::vector<int>(n, c));
  return out;
}

void EdgeColoring::set(int u, int v, int c) {
  if (u == v) throw std::invalid_argument("no color on the diagonal");
  color[u][v] = c;
  color[v][u] = c;
}

namespace {

bool grow_clique(const std::vector<std::uint64_t>& mono_adj, std::uint64_t candidates,
                 int need, std::vector<int>& clique) {
  if (need == 0) return true;
  if (popcount(candidates) < need) return false;
  while (candidates) {
    int v = lowest_bit(candidates);
    candidates &= candidates - 1;
    clique.push_back(v);
    if (grow_clique(mono_adj, candidates & mono_adj[v], need - 1, clique)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

std::optional<MonoClique> find_mono_clique(const EdgeColoring& c, int n) {
  if (n < 1) throw std::invalid_argument("clique size must be at least 1");
  if (c.n > 64) throw std::invalid_argument("coloring too large");
  std::set<int> palette;
  for (int u = 0; u < c.n; ++u)
    for (int v = u + 1; v < c.n; ++v) palette.insert(c.at(u, v));
  if (n == 1 && c.n >= 1) return MonoClique{{0}, palette.empty() ? 0 : *palette.begin()};
  for (int col : palette) {
    std::vector<std::uint64_t> mono(c.n, 0);
    for (int u = 0; u < c.n; ++u)
      for (int v = 0; v < c.n; ++v)
        if (u != v && c.at(u, v) == col) mono[u] |= 1ull << v;
    std::vector<int> clique;
    if (grow_clique(mono, full_mask(c.n), n, clique)) return MonoClique{clique, col};
  }
  return std::nullopt;
}

namespace {

// cross-pattern bit: should s_i ~ t_j hold under this kind? (1-based i, j)
bool want_edge(JoinKind kind, int i, int j) {
  switch (kind) {
    case JoinKind::Mat: return i == j;
    case JoinKind::Antimat: return i != j;
    case JoinKind::Tri: return i >= j;
  }
  return false;
}

bool subsets_match(const Graph& g, const std::vector<int>& ss, const std::vector<int>& ts,
                   TrichotomyHit& hit) {
  int n = static_cast<int>(ss.size());
  VertexSet tmask = indices_to_set(ts);
  // matching / complement of matching: each row must select exactly one /
  // all but one column, forming a permutation
  for (JoinKind kind : {JoinKind::Mat, JoinKind::Antimat}) {
    bool perm_ok = true;
    std::vector<int> partner(n, -1);
    VertexSet taken = 0;
    for (int i = 0; i < n && perm_ok; ++i) {
      VertexSet row = g.adj[ss[i]] & tmask;
      if (kind == JoinKind::Antimat) row = tmask & ~row;
      if (popcount(row) != 1) {
        perm_ok = false;
        break;
      }
      int t = lowest_bit(row);
      if ((taken >> t) & 1) perm_ok = false;
      taken |= 1ull << t;
      partner[i] = t;
    }
    if (perm_ok) {
      hit.kind = kind;
      hit.s_order = ss;
      hit.t_order.assign(partner.begin(), partner.end());
      return true;
    }
  }
  // half-graph: neighborhoods inside T' must form a chain of sizes 1..n
  {
    std::vector<std::pair<int, int>> by_size;  // (|N & T'|, s vertex)
    for (int s : ss) by_size.emplace_back(popcount(g.adj[s] & tmask), s);
    std::sort(by_size.begin(), by_size.end());
    bool ok = true;
    VertexSet prev = 0;
    std::vector<int> t_order;
    for (int i = 0; i < n && ok; ++i) {
      if (by_size[i].first != i + 1) {
        ok = false;
        break;
      }
      VertexSet row = g.adj[by_size[i].second] & tmask;
      if ((row & prev) != prev || popcount(row & ~prev) != 1) {
        ok = false;
        break;
      }
      t_order.push_back(lowest_bit(row & ~prev));
      prev = row;
    }
    if (ok) {
      hit.kind = JoinKind::Tri;
      hit.s_order.clear();
      for (auto& [sz, s] : by_size) hit.s_order.push_back(s);
      hit.t_order = std::move(t_order);
      return true;
    }
  }
  return false;
}

void k_subsets(const std::vector<int>& pool, int k, std::vector<int>& cur,
               std::vector<std::vector<int>>& out, std::size_t from) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i + (k - cur.size()) <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    k_subsets(pool, k, cur, out, i + 1);
    cur.pop_back();
  }
}

}  // namespace

std::optional<TrichotomyHit> bipartite_trichotomy(const Graph& g, VertexSet s, VertexSet t, int n) {
  if (s & t) throw std::invalid_argument("sides must be disjoint");
  if (n < 1) throw std::invalid_argument("pattern size must be at least 1");
  std::vector<int> sv = set_to_indices(s), tv = set_to_indices(t);
  if (static_cast<int>(sv.size()) < n || static_cast<int>(tv.size()) < n) return std::nullopt;
  std::vector<std::vector<int>> s_subsets, t_subsets;
  std::vector<int> cur;
  k_subsets(sv, n, cur, s_subsets, 0);
  k_subsets(tv, n, cur, t_subsets, 0);
  for (const auto& ss : s_subsets) {
    for (const auto& ts : t_subsets) {
      TrichotomyHit hit;
      if (subsets_match(g, ss, ts, hit)) return hit;
    }
  }
  return std::nullopt;
}

bool check_trichotomy(const Graph& g, const TrichotomyHit& hit) {
  int n = static_cast<int>(hit.s_order.size());
  if (static_cast<int>(hit.t_order.size()) != n) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (g.has_edge(hit.s_order[i - 1], hit.t_order[j - 1]) != want_edge(hit.kind, i, j))
        return false;
  return true;
}

bool has_twins_towards(const Graph& g, VertexSet s, VertexSet t) {
  std::vector<int> sv = set_to_indices(s);
  for (std::size_t i = 0; i < sv.size(); ++i)
    for (std::size_t j = i + 1; j < sv.size(); ++j)
      if ((g.adj[sv[i]] & t) == (g.adj[sv[j]] & t)) return true;
  return false;
}

namespace {

bool extend_induced_path(const Graph& g, std::vector<int>& path, VertexSet used,
                         VertexSet forbidden, int want) {
  if (static_cast<int>(path.size()) == want) return true;
  int last = path.back();
  std::uint64_t cands = g.adj[last] & ~used & ~forbidden;
  while (cands) {
    int v = lowest_bit(cands);
    cands &= cands - 1;
    path.push_back(v);
    // vertices adjacent to v (other than v itself) may no longer appear
    // later: they would chord the path
    if (extend_induced_path(g, path, used | (1ull << v), forbidden | (g.adj[last] & ~(1ull << v)),
                            want))
      return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

DegreeOrPath degree_or_path(const Graph& g, int k, int l) {
  DegreeOrPath out;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) >= k) {
      out.kind = DegreeOrPath::HighDegree;
      out.vertex = v;
      return out;
    }
  }
  if (l >= 1 && l <= g.n) {
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> path{v};
      if (l == 1 || extend_induced_path(g, path, 1ull << v, 0, l)) {
        out.kind = DegreeOrPath::Path;
        out.path = path;
        return out;
      }
    }
  }
  return out;
}

}  // namespace brittle
