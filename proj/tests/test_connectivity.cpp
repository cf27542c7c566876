#include <stdexcept>
#include <random>

#include "brittle/connectivity.hpp"
#include "brittle/graph.hpp"
#include "brittle/verify.hpp"
#include "doctest.h"

using namespace brittle;

TEST_CASE("binary rank") {
  CHECK(gf2_rank({{0b11, 0b11}, 2}) == 1);
  BitMatrix ident;
  ident.ncols = 5;
  for (int i = 0; i < 5; ++i) ident.rows.push_back(1ull << i);
  CHECK(gf2_rank(ident) == 5);
  // third row is the sum of the first two
  CHECK(gf2_rank({{0b011, 0b110, 0b101}, 3}) == 2);
  CHECK(gf2_rank({{}, 4}) == 0);
}

TEST_CASE("cut-rank") {
  CHECK(cutrank(make_complete(4), 0b0011) == 1);
  CHECK(cutrank(make_path(4), 0b0101) == 2);
  CHECK(cutrank(make_path(4), 0) == 0);
  CHECK(cutrank(make_path(4), full_mask(4)) == 0);
  CHECK_THROWS_AS(cutrank(make_path(3), 0b1000), std::invalid_argument);
}

TEST_CASE("edge boundary") {
  CHECK(edge_boundary(make_star(3), 0b0001) == 3);
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(edge_boundary(c4, 0b0001) == 2);
  CHECK(edge_boundary(make_path(5), 0b00111) == 1);
}

TEST_CASE("matching boundary") {
  Graph three = m_copies(make_complete(2), 3);
  CHECK(matching_boundary(three, 0b010101) == 3);
  CHECK(matching_boundary(make_star(4), 0b00001) == 1);

  // alternating vertices of the 6-cycle; oracle: enumerate all crossing
  // edge subsets and keep the largest matching
  Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  VertexSet s = 0b010101;
  std::vector<std::pair<int, int>> crossing;
  for (auto [u, v] : c6.edges())
    if (((s >> u) & 1) != ((s >> v) & 1)) crossing.push_back({u, v});
  int best = 0;
  for (std::uint64_t pick = 0; pick < (1ull << crossing.size()); ++pick) {
    VertexSet used = 0;
    bool ok = true;
    int size = 0;
    for (std::size_t i = 0; i < crossing.size() && ok; ++i) {
      if (!((pick >> i) & 1)) continue;
      VertexSet ends = (1ull << crossing[i].first) | (1ull << crossing[i].second);
      if (used & ends) ok = false;
      used |= ends;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  CHECK(best == 3);
  CHECK(matching_boundary(c6, s) == best);
}

TEST_CASE("vertex boundary") {
  CHECK(vertex_boundary(make_path(4), {{0, 1}}) == 1);
  Graph k3 = make_complete(3);
  CHECK(vertex_boundary(k3, k3.edges()) == 0);
  CHECK(vertex_boundary(k3, {}) == 0);
  CHECK(vertex_boundary(make_star(3), {{0, 1}}) == 1);
  CHECK_THROWS_AS(vertex_boundary(make_path(3), {{0, 2}}), std::invalid_argument);
}

TEST_CASE("dispatch matches the direct calls and rejects wrong ground types") {
  Graph star = make_star(3);
  CHECK(eval(ConnKind::EdgeCut, star, VertexSet{0b0001}) == 3);
  CHECK(eval(ConnKind::MatchingCut, make_star(4), VertexSet{0b00001}) == 1);
  CHECK(eval(ConnKind::CutRank, make_path(4), VertexSet{0b0101}) == 2);
  CHECK(eval(ConnKind::VertexCut, make_path(4), {{0, 1}}) == 1);
  CHECK_THROWS_AS(eval(ConnKind::VertexCut, star, VertexSet{1}), std::invalid_argument);
  CHECK_THROWS_AS(eval(ConnKind::EdgeCut, star, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("all four functions are symmetric in the cut") {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : all_graphs_on(n)) {
      for (VertexSet s = 0; s <= g.vertex_set(); ++s) {
        VertexSet comp = g.vertex_set() & ~s;
        CHECK(edge_boundary(g, s) == edge_boundary(g, comp));
        CHECK(matching_boundary(g, s) == matching_boundary(g, comp));
        CHECK(cutrank(g, s) == cutrank(g, comp));
        if (s == g.vertex_set()) break;
      }
      auto es = g.edges();
      for (std::uint64_t f = 0; f < (1ull << es.size()); ++f) {
        std::vector<std::pair<int, int>> in_f, out_f;
        for (std::size_t i = 0; i < es.size(); ++i) ((f >> i) & 1 ? in_f : out_f).push_back(es[i]);
        CHECK(vertex_boundary(g, in_f) == vertex_boundary(g, out_f));
      }
    }
  }
}

TEST_CASE("pointwise relations between the functions") {
  // cutrank <= min(|S|, |V-S|); cutrank <= ec; matc <= ec
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : all_graphs_on(n)) {
      for (VertexSet s = 0; s <= g.vertex_set(); ++s) {
        int rho = cutrank(g, s);
        int eta = edge_boundary(g, s);
        int nu = matching_boundary(g, s);
        CHECK(rho <= std::min(popcount(s), g.n - popcount(s)));
        CHECK(rho <= eta);
        CHECK(nu <= eta);
        CHECK(rho <= popcount(s));
        if (s == g.vertex_set()) break;
      }
    }
  }
}

TEST_CASE("submatrix extraction") {
  BitMatrix m{{0b101, 0b011, 0b110}, 3};
  BitMatrix sub = submatrix(m, {0, 2}, {1, 2});
  CHECK(sub.rows == std::vector<std::uint64_t>{0b10, 0b11});
  CHECK_THROWS_AS(submatrix(m, {3}, {0}), std::invalid_argument);
}
