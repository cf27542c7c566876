#include "brittle/brittleness.hpp"

#include <algorithm>
#include <bit>

namespace brittle {

void validate_partition(const Partition& p, int ground_size, int max_block) {
  std::uint64_t seen = 0;
  for (const auto& block : p.blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    if (max_block > 0 && static_cast<int>(block.size()) > max_block)
      throw std::invalid_argument("block exceeds the size cap");
    for (int e : block) {
      if (e < 0 || e >= ground_size) throw std::invalid_argument("element out of range");
      if ((seen >> e) & 1) throw std::invalid_argument("blocks are not disjoint");
      seen |= 1ull << e;
    }
  }
  if (seen != full_mask(ground_size)) throw std::invalid_argument("blocks do not cover the ground set");
}

namespace {

std::vector<std::uint64_t> block_masks(const Partition& p) {
  std::vector<std::uint64_t> masks;
  masks.reserve(p.blocks.size());
  for (const auto& block : p.blocks) {
    std::uint64_t m = 0;
    for (int e : block) m |= 1ull << e;
    masks.push_back(m);
  }
  return masks;
}

}  // namespace

WidthResult partition_width(ConnKind kind, const Graph& g, const Partition& p, int max_blocks) {
  GroundContext ctx = GroundContext::make(kind, g);
  validate_partition(p, ctx.size, 0);
  int t = static_cast<int>(p.blocks.size());
  if (t > max_blocks) throw ResourceLimit("partition has too many blocks for exact width");
  WidthResult res;
  if (t == 0) return res;
  auto masks = block_masks(p);
  // only unions containing block 0; the complementary union has equal value
  std::uint64_t limit = 1ull << (t - 1);
  for (std::uint64_t half = 0; half < limit; ++half) {
    std::uint64_t sel = (half << 1) | 1;
    std::uint64_t uni = 0;
    for (int b = 0; b < t; ++b)
      if ((sel >> b) & 1) uni |= masks[b];
    int value = ctx.eval_mask(uni);
    if (value > res.width) {
      res.width = value;
      res.worst_blocks.clear();
      for (int b = 0; b < t; ++b)
        if ((sel >> b) & 1) res.worst_blocks.push_back(b);
    }
  }
  return res;
}

namespace {

// Width of the partial partition on the assigned sub-instance, with an
// optional early stop once `stop_at` is reached.
struct PartialWidth {
  int width = 0;
  std::uint64_t worst_sel = 1;
};

PartialWidth partial_width(const GroundContext& ctx, const std::vector<std::uint64_t>& masks,
                           std::uint64_t assigned, int stop_at) {
  PartialWidth out;
  int t = static_cast<int>(masks.size());
  if (t == 0) return out;
  std::uint64_t limit = 1ull << (t - 1);
  for (std::uint64_t half = 0; half < limit; ++half) {
    std::uint64_t sel = (half << 1) | 1;
    std::uint64_t uni = 0;
    for (int b = 0; b < t; ++b)
      if ((sel >> b) & 1) uni |= masks[b];
    int value = ctx.eval_within(uni, assigned);
    if (value > out.width) {
      out.width = value;
      out.worst_sel = sel;
      if (out.width >= stop_at && stop_at >= 0) return out;
    }
  }
  return out;
}

struct BnB {
  const GroundContext& ctx;
  int k;
  int ground;
  std::vector<std::uint64_t> masks;   // current block masks
  std::vector<int> assignment;        // restricted-growth string
  int best = -1;
  std::vector<int> best_assignment;
  std::uint64_t best_worst_sel = 1;

  BnB(const GroundContext& c, int k_) : ctx(c), k(k_), ground(c.size) {
    assignment.assign(ground, -1);
  }

  void run() {
    // incumbent: blocks of k consecutive elements
    {
      Partition greedy;
      for (int e = 0; e < ground; ++e) {
        if (e % k == 0) greedy.blocks.emplace_back();
        greedy.blocks.back().push_back(e);
      }
      auto gm = block_masks(greedy);
      auto pw = partial_width(ctx, gm, full_mask(ground), -1);
      best = pw.width;
      best_worst_sel = pw.worst_sel;
      best_assignment.assign(ground, 0);
      for (int e = 0; e < ground; ++e) best_assignment[e] = e / k;
      if (best == 0) return;  // nothing can beat zero
    }
    rec(0);
  }

  void rec(int elem) {
    if (elem == ground) return;  // leaves are handled at assignment time
    int open = elem == 0 ? 0 : 1 + *std::max_element(assignment.begin(), assignment.begin() + elem);
    int choices = std::min(open + 1, elem + 1);
    for (int b = 0; b < choices; ++b) {
      if (b < open && std::popcount(masks[b]) >= k) continue;  // block full
      if (b == open) masks.push_back(0);
      masks[b] |= 1ull << elem;
      assignment[elem] = b;

      std::uint64_t assigned = full_mask(elem + 1);
      auto pw = partial_width(ctx, masks, assigned, best);
      if (pw.width < best) {
        if (elem + 1 == ground) {
          best = pw.width;
          best_assignment = assignment;
          best_worst_sel = pw.worst_sel;
        } else {
          rec(elem + 1);
        }
      }

      assignment[elem] = -1;
      masks[b] &= ~(1ull << elem);
      if (b == open) masks.pop_back();
      if (best == 0) return;
    }
  }
};

Partition partition_from_assignment(const std::vector<int>& assignment) {
  Partition p;
  for (std::size_t e = 0; e < assignment.size(); ++e) {
    int b = assignment[e];
    while (static_cast<int>(p.blocks.size()) <= b) p.blocks.emplace_back();
    p.blocks[b].push_back(static_cast<int>(e));
  }
  return p;
}

}  // namespace

BrittlenessResult brittleness(ConnKind kind, const Graph& g, int k, SolverLimits limits) {
  if (k < 1) throw std::invalid_argument("block cap k must be at least 1");
  GroundContext ctx = GroundContext::make(kind, g);
  if (ctx.size > limits.max_ground)
    throw ResourceLimit("ground set of " + std::to_string(ctx.size) +
                        " elements exceeds the exact-search cap of " +
                        std::to_string(limits.max_ground));
  BrittlenessResult res;
  if (ctx.size == 0) return res;

  BnB search(ctx, k);
  search.run();
  res.value = search.best;
  res.partition = partition_from_assignment(search.best_assignment);

  // recompute the maximizing union for the stored optimal partition
  auto pw = partial_width(ctx, block_masks(res.partition), ctx.full(), -1);
  res.value = pw.width;
  for (int b = 0; b < static_cast<int>(res.partition.blocks.size()); ++b)
    if ((pw.worst_sel >> b) & 1) res.worst_union.push_back(b);
  return res;
}

namespace {

struct NaiveEnum {
  const GroundContext& ctx;
  int k;
  int ground;
  std::vector<std::uint64_t> masks;
  int best = -1;

  NaiveEnum(const GroundContext& c, int k_) : ctx(c), k(k_), ground(c.size) {}

  void width_of_complete(const std::vector<std::uint64_t>& bm) {
    // early abort once this partition is at least as wide as the best
    int t = static_cast<int>(bm.size());
    int width = 0;
    std::uint64_t limit = t == 0 ? 0 : 1ull << (t - 1);
    for (std::uint64_t half = 0; half < limit; ++half) {
      std::uint64_t sel = (half << 1) | 1;
      std::uint64_t uni = 0;
      for (int b = 0; b < t; ++b)
        if ((sel >> b) & 1) uni |= bm[b];
      width = std::max(width, ctx.eval_mask(uni));
      if (best >= 0 && width >= best) return;
    }
    if (best < 0 || width < best) best = width;
  }

  void rec(int elem) {
    if (elem == ground) {
      width_of_complete(masks);
      return;
    }
    int open = static_cast<int>(masks.size());
    for (int b = 0; b <= open; ++b) {
      if (b < open && std::popcount(masks[b]) >= k) continue;
      if (b == open) masks.push_back(0);
      masks[b] |= 1ull << elem;
      rec(elem + 1);
      masks[b] &= ~(1ull << elem);
      if (b == open) masks.pop_back();
    }
  }
};

}  // namespace

int brittleness_naive(ConnKind kind, const Graph& g, int k, int max_ground) {
  if (k < 1) throw std::invalid_argument("block cap k must be at least 1");
  GroundContext ctx = GroundContext::make(kind, g);
  if (ctx.size > max_ground)
    throw ResourceLimit("ground set of " + std::to_string(ctx.size) +
                        " elements exceeds the naive-enumeration cap of " +
                        std::to_string(max_ground));
  if (ctx.size == 0) return 0;
  NaiveEnum naive(ctx, k);
  naive.rec(0);
  return naive.best;
}

DeletionCheck deletion_monotonicity_check(const Graph& g, int v, int k, SolverLimits limits) {
  g.check_vertex(v);
  Graph smaller = delete_vertex(g, v);
  DeletionCheck out;
  out.matching_before = brittleness(ConnKind::MatchingCut, g, k, limits).value;
  out.matching_after = brittleness(ConnKind::MatchingCut, smaller, k, limits).value;
  out.rank_before = brittleness(ConnKind::CutRank, g, k, limits).value;
  out.rank_after = brittleness(ConnKind::CutRank, smaller, k, limits).value;
  out.pass = out.matching_before <= out.matching_after + 1 && out.rank_before <= out.rank_after + 1;
  return out;
}

}  // namespace brittle
