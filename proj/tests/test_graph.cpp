#include <stdexcept>
#include <random>

#include "brittle/graph.hpp"
#include "brittle/isomorphism.hpp"
#include "doctest.h"

using namespace brittle;

TEST_CASE("families have their documented shapes") {
  Graph p4 = make_path(4);
  CHECK(p4.n == 4);
  CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

  Graph star = make_star(3);
  CHECK(star.n == 4);
  std::vector<int> degs;
  for (int v = 0; v < 4; ++v) degs.push_back(star.degree(v));
  CHECK(degs == std::vector<int>{3, 1, 1, 1});

  Graph s5 = make_empty(5);
  CHECK(s5.n == 5);
  CHECK(s5.edge_count() == 0);

  CHECK(make_complete(4).edge_count() == 6);
  CHECK(make_complete_bipartite(2, 3).edge_count() == 6);

  CHECK_THROWS_AS(make_family(FamilyKind::Path, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(make_star(-2), std::invalid_argument);
  CHECK_THROWS_AS(make_complete(64), std::invalid_argument);
  CHECK(make_complete(63).n == 63);
}

TEST_CASE("copies and unions") {
  Graph g = m_copies(make_complete(2), 3);
  CHECK(g.n == 6);
  CHECK(g.edge_count() == 3);
  CHECK(components(g).size() == 3);
  CHECK(g.label(0) == "0:0");
  CHECK(g.label(5) == "2:1");

  CHECK(is_isomorphic(m_copies(make_path(3), 1), make_path(3)));

  Graph du = disjoint_union(make_complete(3), make_complete(2));
  CHECK(du.n == 5);
  CHECK(du.edge_count() == 4);

  CHECK_THROWS_AS(m_copies(make_path(2), 0), std::invalid_argument);
}

TEST_CASE("glued families") {
  // P4 = a-b-c-d with A = {a, d}: four middle paths between two shared ends
  Graph fig1 = quotient_family({make_path(4), 4, (1ull << 0) | (1ull << 3)});
  CHECK(fig1.n == 4 * 2 + 2);
  CHECK(fig1.edge_count() == 4 * 3);
  CHECK(fig1.label(0) == "A");
  CHECK(fig1.label(1) == "A");

  Graph h = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  CHECK(is_isomorphic(quotient_family({h, 1, 1ull << 3}), h));

  // P3 = a-b-c glued at {a, c} twice is the 4-cycle
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(is_isomorphic(quotient_family({make_path(3), 2, 0b101}), c4));

  CHECK_THROWS_AS(quotient_family({make_path(3), 2, 0b011}), std::invalid_argument);
  CHECK_THROWS_AS(quotient_family({make_empty(2), 2, 0b11}), std::invalid_argument);
}

TEST_CASE("glued family vertex count is m(h-a)+a") {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> hsize(1, 6), copies(1, 4);
    int hn = hsize(rng);
    Graph h(hn);
    for (int u = 0; u < hn; ++u)
      for (int v = u + 1; v < hn; ++v)
        if (coin(rng)) h.add_edge(u, v);
    VertexSet a = 0;
    for (int v = 0; v < hn; ++v)
      if (coin(rng) && !(h.adj[v] & a)) a |= 1ull << v;
    if (a == h.vertex_set()) continue;
    int m = copies(rng);
    Graph q = quotient_family({h, m, a});
    CHECK(q.n == m * (hn - popcount(a)) + popcount(a));
  }
}

TEST_CASE("joins") {
  // each w_i pendant on v_i plus the complete side
  Graph fig2 = join(make_complete(5), make_empty(5), JoinKind::Mat);
  CHECK(fig2.n == 10);
  for (int i = 0; i < 5; ++i) {
    CHECK(fig2.degree(i) == 5);
    CHECK(fig2.degree(5 + i) == 1);
    CHECK(fig2.has_edge(i, 5 + i));
  }

  CHECK(is_isomorphic(join(make_empty(2), make_empty(2), JoinKind::Tri), make_path(4)));

  Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(is_isomorphic(join(make_empty(3), make_empty(3), JoinKind::Antimat), c6));

  CHECK_THROWS_AS(join(make_path(3), make_path(4), JoinKind::Mat), std::invalid_argument);
}

TEST_CASE("join sides induce the operands exactly") {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> size(1, 6);
    int n = size(rng);
    auto rand_graph = [&] {
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng)) g.add_edge(u, v);
      return g;
    };
    Graph g = rand_graph(), h = rand_graph();
    for (JoinKind kind : {JoinKind::Mat, JoinKind::Antimat, JoinKind::Tri}) {
      Graph j = join(g, h, kind);
      CHECK(induced(j, full_mask(n)) == g);
      CHECK(induced(j, full_mask(2 * n) & ~full_mask(n)) == h);
    }
  }
}

TEST_CASE("complement is an involution") {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> size(0, 9);
    int n = size(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).edge_count() == n * (n - 1) / 2 - g.edge_count());
  }
}

TEST_CASE("vertex deletion reindexes densely") {
  Graph p5 = make_path(5);
  DeleteResult res = delete_vertices(p5, 0b00100);
  CHECK(res.graph.n == 4);
  CHECK(res.graph.edge_count() == 2);
  CHECK(res.old_to_new == std::vector<int>{0, 1, -1, 2, 3});

  CHECK(delete_edges(p5, {{1, 2}}).edge_count() == 3);
  CHECK_THROWS_AS(delete_edges(p5, {{0, 2}}), std::invalid_argument);

  CHECK(components(make_path(1)).size() == 1);
  CHECK(components(make_empty(0)).empty());
  CHECK(is_connected(make_path(4)));
  CHECK(!is_connected(m_copies(make_path(2), 2)));
}
