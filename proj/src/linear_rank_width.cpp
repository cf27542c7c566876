#include "brittle/linear_rank_width.hpp"

#include <algorithm>
#include <stdexcept>

#include "brittle/connectivity.hpp"
#include "brittle/errors.hpp"

namespace brittle {

int layout_width(const Graph& g, const Layout& layout) {
  if (static_cast<int>(layout.order.size()) != g.n)
    throw std::invalid_argument("layout must order every vertex");
  VertexSet seen = 0;
  for (int v : layout.order) {
    g.check_vertex(v);
    if ((seen >> v) & 1) throw std::invalid_argument("layout repeats a vertex");
    seen |= 1ull << v;
  }
  int width = 0;
  VertexSet prefix = 0;
  for (int i = 0; i + 1 < g.n; ++i) {
    prefix |= 1ull << layout.order[i];
    width = std::max(width, cutrank(g, prefix));
  }
  return width;
}

LrwResult linear_rank_width(const Graph& g) {
  if (g.n > 18) throw ResourceLimit("linear rank-width DP is capped at 18 vertices");
  LrwResult res;
  if (g.n == 0) return res;
  std::size_t total = 1ull << g.n;
  std::vector<std::uint8_t> rank(total), cost(total);
  std::vector<std::int8_t> last(total, -1);
  GroundContext ctx = GroundContext::make(ConnKind::CutRank, g);
  rank[0] = 0;
  cost[0] = 0;
  for (std::size_t s = 1; s < total; ++s) {
    rank[s] = static_cast<std::uint8_t>(ctx.eval_mask(s));
    int best = 255, best_v = -1;
    for (std::uint64_t t = s; t; t &= t - 1) {
      int v = lowest_bit(t);
      int prev = cost[s & ~(1ull << v)];
      if (prev < best) {
        best = prev;
        best_v = v;
      }
    }
    cost[s] = static_cast<std::uint8_t>(std::max(best, static_cast<int>(rank[s])));
    last[s] = static_cast<std::int8_t>(best_v);
  }
  res.value = cost[total - 1];
  std::vector<int> order;
  for (std::size_t s = total - 1; s;) {
    int v = last[s];
    order.push_back(v);
    s &= ~(1ull << v);
  }
  std::reverse(order.begin(), order.end());
  res.layout.order = std::move(order);
  return res;
}

Layout concat(const Layout& a, const Layout& b) {
  VertexSet sa = indices_to_set(a.order), sb = indices_to_set(b.order);
  if (sa & sb) throw std::invalid_argument("layouts overlap");
  if (static_cast<int>(a.order.size()) != popcount(sa) ||
      static_cast<int>(b.order.size()) != popcount(sb))
    throw std::invalid_argument("layouts repeat vertices");
  Layout out;
  out.order = a.order;
  out.order.insert(out.order.end(), b.order.begin(), b.order.end());
  return out;
}

LrwBoundReport check_lrw_brittleness_bound(const Graph& g, int k, SolverLimits limits) {
  LrwBoundReport rep;
  rep.k = k;
  rep.lrw = linear_rank_width(g).value;
  BrittlenessResult beta = brittleness(ConnKind::CutRank, g, k, limits);
  rep.beta_rank = beta.value;
  rep.partition = beta.partition;
  rep.bound = beta.value + k / 2;
  rep.holds = rep.lrw <= rep.bound;

  // the explicit layout: blocks of the optimal partition, laid out block by
  // block, each block in increasing vertex order
  Layout blocks;
  for (const auto& block : beta.partition.blocks) {
    Layout piece;
    piece.order = block;
    std::sort(piece.order.begin(), piece.order.end());
    blocks = concat(blocks, piece);
  }
  rep.block_layout = blocks;
  rep.block_layout_width = layout_width(g, blocks);
  rep.block_layout_holds = rep.block_layout_width <= rep.bound;
  return rep;
}

}  // namespace brittle
