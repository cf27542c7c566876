#include <algorithm>
#include <random>
#include <unordered_set>

#include "brittle/graph.hpp"
#include "brittle/isomorphism.hpp"
#include "doctest.h"

using namespace brittle;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("isomorphism examples") {
  CHECK(is_isomorphic(make_path(4), join(make_empty(2), make_empty(2), JoinKind::Tri)));
  CHECK(!is_isomorphic(make_complete(3), make_path(3)));
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(is_isomorphic(c4, quotient_family({make_path(3), 2, 0b101})));
  CHECK(is_isomorphic(make_empty(0), make_empty(0)));
}

TEST_CASE("isomorphism is an equivalence, stable under relabeling") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size(1, 8);
    int n = size(rng);
    Graph g = random_graph(n, rng);
    CHECK(is_isomorphic(g, g));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    CHECK(is_isomorphic(g, h));
    CHECK(is_isomorphic(h, g));
    CHECK(canonical_form(g) == canonical_form(h));
    auto map = find_isomorphism(g, h);
    REQUIRE(map.has_value());
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) CHECK(g.has_edge(u, v) == h.has_edge((*map)[u], (*map)[v]));
  }
}

TEST_CASE("canonical forms separate the 11 classes on four vertices") {
  std::unordered_set<std::string> classes;
  for (int mask = 0; mask < 64; ++mask) {
    Graph g(4);
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    classes.insert(canonical_form(g).bytes());
  }
  CHECK(classes.size() == 11);
}

TEST_CASE("induced pattern search") {
  auto hit = find_induced_pattern(make_path(5), make_path(3));
  REQUIRE(hit.has_value());
  Graph sub = induced(make_path(5), *hit);
  CHECK(is_isomorphic(sub, make_path(3)));

  CHECK(!find_induced_pattern(make_complete(4), make_empty(2)).has_value());

  Graph matching3 = join(make_empty(3), make_empty(3), JoinKind::Mat);
  auto whole = find_induced_pattern(matching3, m_copies(make_complete(2), 3));
  REQUIRE(whole.has_value());
  CHECK(*whole == matching3.vertex_set());
}

TEST_CASE("subgraph pattern search") {
  CHECK(find_subgraph_pattern(make_complete(4), make_path(4)).has_value());
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(!find_subgraph_pattern(c5, make_complete(3)).has_value());
  CHECK(!find_subgraph_pattern(make_star(5), m_copies(make_complete(2), 2)).has_value());
}

TEST_CASE("subgraph hits certify a monomorphism") {
  std::mt19937_64 rng(33);
  int found = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Graph host = random_graph(7, rng, 0.6);
    Graph pattern = random_graph(4, rng, 0.4);
    auto hit = find_subgraph_pattern(host, pattern);
    if (!hit) continue;
    ++found;
    // injective map, every pattern edge lands on a host edge
    std::vector<int> sorted(hit->map);
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (auto [u, v] : pattern.edges()) CHECK(host.has_edge(hit->map[u], hit->map[v]));
    CHECK(static_cast<int>(hit->edges.size()) == pattern.edge_count());
    for (auto [u, v] : hit->edges) CHECK(host.has_edge(u, v));
  }
  CHECK(found > 10);
}
