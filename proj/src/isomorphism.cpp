#include "brittle/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace brittle {

std::string CanonicalForm::bytes() const {
  std::string out;
  out.reserve(1 + 8 * rows.size());
  out.push_back(static_cast<char>(n));
  for (std::uint64_t r : rows)
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((r >> (8 * b)) & 0xff));
  return out;
}

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  if (static_cast<int>(colors.size()) != g.n) colors.assign(g.n, 0);
  for (;;) {
    int ndistinct = 0;
    {
      std::vector<int> seen(colors);
      std::sort(seen.begin(), seen.end());
      ndistinct = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    }
    // signature = (own color, sorted neighbor colors); new ids follow
    // lexicographic signature order, so they do not depend on labels
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(colors[v]);
      for (int u : set_to_indices(g.adj[v])) sig[v].push_back(colors[u]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < g.n; ++v) ids.emplace(sig[v], 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < g.n; ++v) colors[v] = ids[sig[v]];
    if (next == ndistinct) return colors;
  }
}

namespace {

std::vector<std::uint64_t> rows_under_order(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  std::vector<std::uint64_t> rows(g.n, 0);
  for (int i = 0; i < g.n; ++i)
    for (int u : set_to_indices(g.adj[order[i]])) rows[i] |= 1ull << pos[u];
  return rows;
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::uint64_t> best;
  bool have = false;

  void leaf(const std::vector<int>& colors) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[colors[v]] = v;
    auto rows = rows_under_order(g, order);
    if (!have || rows < best) {
      best = std::move(rows);
      have = true;
    }
  }

  void rec(std::vector<int> colors) {
    colors = refine_colors(g, std::move(colors));
    // first non-singleton color class, by color id
    std::vector<int> count(g.n + 1, 0);
    for (int c : colors) count[c]++;
    int target = -1;
    for (int c = 0; c <= g.n && target < 0; ++c)
      if (count[c] >= 2) target = c;
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> split(g.n);
      for (int u = 0; u < g.n; ++u) split[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      rec(std::move(split));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm out;
  out.n = g.n;
  if (g.n == 0) return out;
  int m = g.edge_count();
  if (m == 0 || m == g.n * (g.n - 1) / 2) {  // empty / complete: any order works
    out.rows = rows_under_order(g, [&] {
      std::vector<int> id(g.n);
      for (int v = 0; v < g.n; ++v) id[v] = v;
      return id;
    }());
    return out;
  }
  CanonSearch search{g};
  search.rec(std::vector<int>(g.n, 0));
  out.rows = std::move(search.best);
  return out;
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, const std::vector<int>& acolor,
                   const std::vector<int>& bcolor, std::vector<int>& map, VertexSet& used, int i) {
  if (i == a.n) return true;
  for (int w = 0; w < b.n; ++w) {
    if ((used >> w) & 1) continue;
    if (bcolor[w] != acolor[i]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      if (a.has_edge(i, j) != b.has_edge(w, map[j])) ok = false;
    if (!ok) continue;
    map[i] = w;
    used |= 1ull << w;
    if (iso_backtrack(a, b, acolor, bcolor, map, used, i + 1)) return true;
    used &= ~(1ull << w);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
  auto acolor = refine_colors(a, {});
  auto bcolor = refine_colors(b, {});
  auto hist = [&](const std::vector<int>& c) {
    std::vector<int> h(c);
    std::sort(h.begin(), h.end());
    return h;
  };
  if (hist(acolor) != hist(bcolor)) return std::nullopt;
  std::vector<int> map(a.n, -1);
  VertexSet used = 0;
  if (iso_backtrack(a, b, acolor, bcolor, map, used, 0)) return map;
  return std::nullopt;
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

namespace {

// Backtracking embedding, pattern vertices in decreasing-degree order.
struct EmbedSearch {
  const Graph& host;
  const Graph& pattern;
  bool induced_mode;
  std::vector<int> order;  // pattern vertices, most-constrained first
  std::vector<int> map;    // by pattern index
  VertexSet used = 0;

  EmbedSearch(const Graph& h, const Graph& p, bool ind) : host(h), pattern(p), induced_mode(ind) {
    order.resize(pattern.n);
    for (int v = 0; v < pattern.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return pattern.degree(x) > pattern.degree(y); });
    map.assign(pattern.n, -1);
  }

  bool rec(int i) {
    if (i == pattern.n) return true;
    int p = order[i];
    for (int w = 0; w < host.n; ++w) {
      if ((used >> w) & 1) continue;
      if (host.degree(w) < pattern.degree(p)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int q = order[j];
        bool pe = pattern.has_edge(p, q);
        bool he = host.has_edge(w, map[q]);
        if (induced_mode ? pe != he : (pe && !he)) ok = false;
      }
      if (!ok) continue;
      map[p] = w;
      used |= 1ull << w;
      if (rec(i + 1)) return true;
      used &= ~(1ull << w);
      map[p] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& host, const Graph& pattern) {
  if (pattern.n > host.n || pattern.edge_count() > host.edge_count()) return std::nullopt;
  EmbedSearch s(host, pattern, /*induced=*/true);
  if (s.rec(0)) return s.map;
  return std::nullopt;
}

std::optional<VertexSet> find_induced_pattern(const Graph& host, const Graph& pattern) {
  auto emb = find_induced_embedding(host, pattern);
  if (!emb) return std::nullopt;
  VertexSet s = 0;
  for (int w : *emb) s |= 1ull << w;
  return s;
}

std::optional<SubgraphHit> find_subgraph_pattern(const Graph& host, const Graph& pattern) {
  if (pattern.n > host.n || pattern.edge_count() > host.edge_count()) return std::nullopt;
  EmbedSearch s(host, pattern, /*induced=*/false);
  if (!s.rec(0)) return std::nullopt;
  SubgraphHit hit;
  hit.map = s.map;
  for (int w : s.map) hit.vertices |= 1ull << w;
  for (auto [u, v] : pattern.edges()) {
    int a = s.map[u], b = s.map[v];
    hit.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(hit.edges.begin(), hit.edges.end());
  return hit;
}

}  // namespace brittle
