#include "brittle/brittleness.hpp"
#include "brittle/graph.hpp"
#include "brittle/verify.hpp"
#include "doctest.h"

using namespace brittle;

TEST_CASE("partition width") {
  // singleton blocks on the star: the worst union cuts all three edges
  Graph star = make_star(3);
  Partition singles{{{0}, {1}, {2}, {3}}};
  WidthResult w = partition_width(ConnKind::EdgeCut, star, singles);
  CHECK(w.width == 3);

  Partition one_block{{{0, 1, 2, 3}}};
  CHECK(partition_width(ConnKind::EdgeCut, star, one_block).width == 0);
  CHECK(partition_width(ConnKind::CutRank, star, one_block).width == 0);

  Graph triple = m_copies(make_complete(2), 3);
  Partition six{{{0}, {1}, {2}, {3}, {4}, {5}}};
  WidthResult rho = partition_width(ConnKind::CutRank, triple, six);
  CHECK(rho.width == 3);
  // the reported worst union reproduces the width
  VertexSet uni = 0;
  for (int b : rho.worst_blocks)
    for (int e : six.blocks[b]) uni |= 1ull << e;
  CHECK(cutrank(triple, uni) == 3);
}

TEST_CASE("partition validation") {
  Graph p3 = make_path(3);
  CHECK_THROWS_AS(partition_width(ConnKind::EdgeCut, p3, Partition{{{0, 1}}}),
                  std::invalid_argument);  // missing element
  CHECK_THROWS_AS(partition_width(ConnKind::EdgeCut, p3, Partition{{{0, 1, 2}, {2}}}),
                  std::invalid_argument);  // overlap
  CHECK_THROWS_AS(partition_width(ConnKind::EdgeCut, p3, Partition{{{0, 1, 2}, {}}}),
                  std::invalid_argument);  // empty block
  Partition many;
  for (int i = 0; i < 26; ++i) many.blocks.push_back({i});
  CHECK_THROWS_AS(partition_width(ConnKind::CutRank, make_path(26), many), ResourceLimit);
}

TEST_CASE("exact brittleness on the named families") {
  for (int n = 2; n <= 6; ++n) CHECK(brittleness(ConnKind::CutRank, make_complete(n), 1).value == 1);
  CHECK(brittleness(ConnKind::CutRank, m_copies(make_complete(2), 3), 1).value == 3);
  CHECK(brittleness(ConnKind::EdgeCut, make_star(3), 1).value == 3);
  CHECK(brittleness(ConnKind::MatchingCut, m_copies(make_complete(2), 2), 1).value == 2);
  CHECK(brittleness(ConnKind::EdgeCut, make_empty(0), 1).value == 0);
  CHECK(brittleness(ConnKind::VertexCut, make_path(1), 1).value == 0);

  CHECK_THROWS_AS(brittleness(ConnKind::EdgeCut, make_path(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(brittleness(ConnKind::EdgeCut, make_path(14), 2), ResourceLimit);
}

TEST_CASE("naive oracle examples") {
  CHECK(brittleness_naive(ConnKind::MatchingCut, m_copies(make_complete(2), 2), 1) == 2);
  CHECK(brittleness_naive(ConnKind::EdgeCut, make_path(1), 1) == 0);
  CHECK(brittleness_naive(ConnKind::CutRank, make_path(1), 1) == 0);
  CHECK_THROWS_AS(brittleness_naive(ConnKind::EdgeCut, make_path(10), 1), ResourceLimit);
}

TEST_CASE("solver agrees with the oracle on all graphs up to five vertices") {
  const ConnKind kinds[] = {ConnKind::VertexCut, ConnKind::EdgeCut, ConnKind::MatchingCut,
                            ConnKind::CutRank};
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : all_graphs_on(n)) {
      for (ConnKind kind : kinds) {
        if (edge_ground(kind) && g.edge_count() > 9) continue;
        for (int k = 1; k <= 2; ++k) {
          CAPTURE(n);
          CAPTURE(static_cast<int>(kind));
          CAPTURE(k);
          CHECK(brittleness(kind, g, k).value == brittleness_naive(kind, g, k));
        }
      }
    }
  }
}

TEST_CASE("brittleness is monotone in the block cap") {
  const ConnKind kinds[] = {ConnKind::VertexCut, ConnKind::EdgeCut, ConnKind::MatchingCut,
                            ConnKind::CutRank};
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : all_graphs_on(n)) {
      for (ConnKind kind : kinds) {
        if (edge_ground(kind) && g.edge_count() > 8) continue;
        int prev = -1;
        for (int k = 1; k <= 4; ++k) {
          int value = brittleness(kind, g, k).value;
          if (prev >= 0) CHECK(value <= prev);
          prev = value;
        }
      }
    }
  }
}

TEST_CASE("optimal partitions are reproducible and certified") {
  // every partition of an edgeless ground has width zero, so the stored
  // optimum must be the lexicographically least assignment: consecutive
  // blocks of size k
  BrittlenessResult flat = brittleness(ConnKind::CutRank, make_empty(4), 2);
  CHECK(flat.value == 0);
  CHECK(flat.partition.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  BrittlenessResult res = brittleness(ConnKind::EdgeCut, make_star(4), 2);
  validate_partition(res.partition, 5, 2);
  WidthResult w = partition_width(ConnKind::EdgeCut, make_star(4), res.partition);
  CHECK(w.width == res.value);
  // worst union certificate evaluates back to the optimum
  VertexSet uni = 0;
  for (int b : res.worst_union)
    for (int e : res.partition.blocks[b]) uni |= 1ull << e;
  CHECK(edge_boundary(make_star(4), uni) == res.value);
}

TEST_CASE("deleting a vertex moves matching and rank brittleness by at most one") {
  CHECK(deletion_monotonicity_check(make_path(5), 4, 2).pass);
  CHECK(deletion_monotonicity_check(make_path(1), 0, 1).pass);
  CHECK(deletion_monotonicity_check(m_copies(make_complete(2), 3), 2, 1).pass);
}
