#pragma once

#include <vector>

#include "brittle/brittleness.hpp"
#include "brittle/graph.hpp"

namespace brittle {

/// Vertex ordering; width is the maximum cut-rank over proper prefixes.
struct Layout {
  std::vector<int> order;
};

int layout_width(const Graph& g, const Layout& layout);

struct LrwResult {
  int value = 0;
  Layout layout;
};

/// Exact linear rank-width by dynamic programming over prefix sets:
/// cost(S) = max(cutrank(S), min over v in S of cost(S - v)), cost({}) = 0.
/// Capped at 18 vertices (2^n table).
LrwResult linear_rank_width(const Graph& g);

/// Concatenation of two layouts with disjoint supports.
Layout concat(const Layout& a, const Layout& b);

/// Both sides of the width-versus-brittleness inequality, computed exactly,
/// plus the block-by-block layout built from an optimal partition, whose
/// width must obey the same bound directly.
struct LrwBoundReport {
  int k = 0;
  int lrw = 0;
  int beta_rank = 0;
  int bound = 0;  // beta_rank + k/2
  bool holds = false;
  Layout block_layout;
  int block_layout_width = 0;
  bool block_layout_holds = false;
  Partition partition;
};

LrwBoundReport check_lrw_brittleness_bound(const Graph& g, int k, SolverLimits limits = {});

}  // namespace brittle
