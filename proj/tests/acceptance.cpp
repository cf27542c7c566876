// Acceptance suite: one test per release criterion, each printing a single
// PASS/FAIL line. Run through ctest or directly; the binary exits nonzero
// when any criterion fails.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "brittle/bounds.hpp"
#include "brittle/brittleness.hpp"
#include "brittle/connectivity.hpp"
#include "brittle/graph.hpp"
#include "brittle/graphio.hpp"
#include "brittle/isomorphism.hpp"
#include "brittle/linear_rank_width.hpp"
#include "brittle/structure.hpp"
#include "brittle/verify.hpp"
#include "brittle/vertex_minor.hpp"
#include "doctest.h"

using namespace brittle;

namespace {

void report(int criterion, bool ok, const char* text) {
  std::printf("[criterion %2d] %s  %s\n", criterion, ok ? "PASS" : "FAIL", text);
  std::fflush(stdout);
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

}  // namespace

TEST_CASE("criterion 1: solver equals the exhaustive oracle on six vertices") {
  Stopwatch watch;
  const ConnKind kinds[] = {ConnKind::VertexCut, ConnKind::EdgeCut, ConnKind::MatchingCut,
                            ConnKind::CutRank};
  SolverLimits limits;
  limits.max_ground = 16;
  long mismatches = 0, cases = 0;
  std::size_t six_classes = 0;
  for (int n = 0; n <= 6; ++n) {
    const auto classes = all_graphs_on(n);
    if (n == 6) six_classes = classes.size();
    for (const Graph& g : classes) {
      for (ConnKind kind : kinds) {
        for (int k = 1; k <= 3; ++k) {
          int fast = brittleness(kind, g, k, limits).value;
          int slow = brittleness_naive(kind, g, k, 16);
          ++cases;
          if (fast != slow) ++mismatches;
        }
      }
    }
  }
  bool ok = mismatches == 0 && six_classes == 156 && watch.seconds() < 180.0;
  report(1, ok, "oracle equivalence, every class on <= 6 vertices, all functions, k in 1..3");
  CHECK(six_classes == 156);
  CHECK(mismatches == 0);
  CHECK(cases == (1 + 1 + 2 + 4 + 11 + 34 + 156) * 4 * 3);
  CHECK(watch.seconds() < 180.0);
}

TEST_CASE("criterion 2: direct pivot equals the three complementations") {
  Rng rng(101);
  int mismatches = 0, done = 0;
  std::uniform_int_distribution<int> size(2, 10);
  while (done < 500) {
    Graph g = random_graph(size(rng), 0.5, rng);
    auto es = g.edges();
    if (es.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
    auto [u, v] = es[pick(rng)];
    Graph direct = pivot(g, u, v);
    if (!(direct == local_complement(local_complement(local_complement(g, u), v), u)))
      ++mismatches;
    ++done;
  }
  report(2, mismatches == 0, "pivot identity on 500 random graphs up to 10 vertices");
  CHECK(mismatches == 0);
}

TEST_CASE("criterion 3: cut-rank invariance under local complementation") {
  Rng rng(103);
  int mismatches = 0;
  std::uniform_int_distribution<int> size(1, 10);
  for (int i = 0; i < 500; ++i) {
    Graph g = random_graph(size(rng), 0.5, rng);
    std::uniform_int_distribution<int> pick(0, g.n - 1);
    int v = pick(rng);
    VertexSet s = random_subset(g.vertex_set(), rng);
    if (cutrank(g, s) != cutrank(local_complement(g, v), s)) ++mismatches;
  }
  report(3, mismatches == 0, "cut-rank invariance on 500 random (graph, vertex, set) triples");
  CHECK(mismatches == 0);
}

TEST_CASE("criterion 4: glued triples force vertex brittleness at least two") {
  int violations = 0, instances = 0;
  for (int k = 1; k <= 3; ++k) {
    for (const Graph& h : connected_graphs_with_edges(k + 1)) {
      for (VertexSet a = 0; a < (1ull << h.n); ++a) {
        if (a == h.vertex_set()) continue;
        bool independent = true;
        for (int v : set_to_indices(a))
          if (h.adj[v] & a) independent = false;
        if (!independent) continue;
        if (!is_connected(induced(h, h.vertex_set() & ~a))) continue;
        Graph g = quotient_family({h, 3, a});
        ++instances;
        if (brittleness(ConnKind::VertexCut, g, k).value < 2) ++violations;
      }
    }
  }
  bool ok = violations == 0 && instances > 0;
  report(4, ok, "vertex brittleness of glued triples, every H with k+1 in 2..4 edges");
  CHECK(violations == 0);
  CHECK(instances > 0);
}

TEST_CASE("criterion 5: disjoint copies force edge, matching, and rank brittleness") {
  const ConnKind kinds[] = {ConnKind::EdgeCut, ConnKind::MatchingCut, ConnKind::CutRank};
  int violations = 0;
  for (int k = 1; k <= 3; ++k) {
    for (const Graph& h : connected_graphs_on(k + 1)) {
      Graph g = m_copies(h, 3);
      for (ConnKind kind : kinds)
        if (brittleness(kind, g, k).value < 2) ++violations;  // n=3 > 2m with m=1
    }
  }
  // n = 5, m = 2 where the ground set stays within the exact-search cap
  for (const Graph& h : connected_graphs_on(2)) {
    Graph g = m_copies(h, 5);
    for (ConnKind kind : kinds)
      if (brittleness(kind, g, 1).value < 3) ++violations;
  }
  report(5, violations == 0, "brittleness of disjoint copies (n=3, m=1 and n=5, m=2 at k=1)");
  CHECK(violations == 0);
}

TEST_CASE("criterion 6: stars pin edge brittleness to exactly m+1") {
  int violations = 0;
  for (int k = 1; k <= 7; ++k) {
    for (int m = 1; k + m <= 8; ++m) {
      Graph star = make_star(k + m);
      int exact = brittleness(ConnKind::EdgeCut, star, k).value;
      int oracle = brittleness_naive(ConnKind::EdgeCut, star, k);
      if (exact < m + 1 || exact != m + 1 || oracle != m + 1) ++violations;
    }
  }
  report(6, violations == 0, "edge brittleness of stars, all k+m <= 8, exact and oracle");
  CHECK(violations == 0);
}

TEST_CASE("criterion 7: removing small bridges costs at most the hub size") {
  Rng rng(107);
  int violations = 0;
  std::uniform_int_distribution<int> size(1, 7), kdist(1, 2);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph_max_edges(size(rng), 12, rng);
    VertexSet a = random_subset(g.vertex_set(), rng) & random_subset(g.vertex_set(), rng);
    int k = kdist(rng);
    Graph rest = delete_bridges(g, a, k);
    if (brittleness(ConnKind::VertexCut, rest, k).value <
        brittleness(ConnKind::VertexCut, g, k).value - popcount(a))
      ++violations;
  }
  report(7, violations == 0, "bridge deletion inequality on 200 random instances");
  CHECK(violations == 0);
}

TEST_CASE("criterion 8: the reduction recipes and path equivalences") {
  int failures = 0;
  struct Row {
    ConstructionName name;
    int threshold;
  };
  for (Row row : {Row{ConstructionName::MatKS, 2}, Row{ConstructionName::MatKK, 3},
                  Row{ConstructionName::AntimatSS, 3}, Row{ConstructionName::AntimatKS, 3},
                  Row{ConstructionName::AntimatKK, 2}, Row{ConstructionName::TriKK, 2}}) {
    for (int n = row.threshold; n <= 6; ++n) {
      Construction c = construction(row.name, n);
      if (!is_isomorphic(apply_word(c.input, c.word), c.target)) ++failures;
      if (c.checkpoint) {
        LCWord prefix;
        prefix.ops.assign(c.word.ops.begin(), c.word.ops.begin() + c.checkpoint->first);
        if (!is_isomorphic(apply_word(c.input, prefix), c.checkpoint->second)) ++failures;
      }
    }
  }
  for (int n = 2; n <= 4; ++n) {
    Graph path = make_path(2 * n);
    if (orbit_contains(join(make_empty(n), make_empty(n), JoinKind::Tri), path) !=
        SearchStatus::Found)
      ++failures;
    if (orbit_contains(join(make_complete(n), make_empty(n), JoinKind::Tri), path) !=
        SearchStatus::Found)
      ++failures;
    Construction c = construction(ConstructionName::TriKK, n);
    if (orbit_contains(c.target, make_path(2 * n - 2)) != SearchStatus::Found) ++failures;
  }
  report(8, failures == 0, "join reductions reach their targets; half-graphs are path-equivalent");
  CHECK(failures == 0);
}

TEST_CASE("criterion 9: linear rank-width against rank brittleness") {
  int violations = 0;
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : all_graphs_on(n)) {
      for (int k = 1; k <= 3; ++k) {
        LrwBoundReport rep = check_lrw_brittleness_bound(g, k);
        if (!rep.holds || !rep.block_layout_holds) ++violations;
      }
    }
  }
  report(9, violations == 0,
         "width bound and its explicit block layout, every class on <= 6 vertices, k in 1..3");
  CHECK(violations == 0);
}

TEST_CASE("criterion 10: rank submodularity on random binary matrices") {
  Rng rng(110);
  std::uniform_int_distribution<int> dim(1, 8);
  std::bernoulli_distribution bit(0.5);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    int r = dim(rng), c = dim(rng);
    BitMatrix m;
    m.ncols = c;
    for (int row = 0; row < r; ++row) {
      std::uint64_t bits = 0;
      for (int col = 0; col < c; ++col)
        if (bit(rng)) bits |= 1ull << col;
      m.rows.push_back(bits);
    }
    auto subset = [&](int count) {
      std::vector<int> idx;
      for (int j = 0; j < count; ++j)
        if (bit(rng)) idx.push_back(j);
      return idx;
    };
    auto x1 = subset(r), x2 = subset(r), y1 = subset(c), y2 = subset(c);
    std::vector<int> xm, xu, ym, yu;
    std::set_intersection(x1.begin(), x1.end(), x2.begin(), x2.end(), std::back_inserter(xm));
    std::set_union(x1.begin(), x1.end(), x2.begin(), x2.end(), std::back_inserter(xu));
    std::set_intersection(y1.begin(), y1.end(), y2.begin(), y2.end(), std::back_inserter(ym));
    std::set_union(y1.begin(), y1.end(), y2.begin(), y2.end(), std::back_inserter(yu));
    if (gf2_rank(submatrix(m, x1, y1)) + gf2_rank(submatrix(m, x2, y2)) <
        gf2_rank(submatrix(m, xm, yu)) + gf2_rank(submatrix(m, xu, ym)))
      ++violations;
  }
  report(10, violations == 0, "submodularity on 1000 random matrices up to 8x8");
  CHECK(violations == 0);
}

TEST_CASE("criterion 11: rank brittleness along vertex-minor reductions") {
  Rng rng(111);
  int violations = 0;
  std::uniform_int_distribution<int> size(2, 7), kdist(1, 3), ops(1, 6);
  std::bernoulli_distribution del(0.4);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(size(rng), 0.5, rng);
    Graph h = g;
    int deleted = 0;
    int steps = ops(rng);
    for (int s = 0; s < steps && h.n > 1; ++s) {
      std::uniform_int_distribution<int> pick(0, h.n - 1);
      if (del(rng)) {
        h = delete_vertex(h, pick(rng));
        ++deleted;
      } else {
        h = local_complement(h, pick(rng));
      }
    }
    int k = kdist(rng);
    if (brittleness(ConnKind::CutRank, g, k).value >
        brittleness(ConnKind::CutRank, h, k).value + deleted)
      ++violations;
  }
  report(11, violations == 0, "vertex-minor monotonicity on 200 random pairs");
  CHECK(violations == 0);
}

TEST_CASE("criterion 12: threshold calculators match their closed forms") {
  bool ok = bound_ell(BoundFamily::Vertex, 1, 2) == 4096 &&
            bound_ell(BoundFamily::Edge, 1, 3) == 6 &&
            bound_ell(BoundFamily::Matching, 2, 3) == 18;
  report(12, ok, "vertex l(1,2)=4096, edge l(1,3)=6, matching l(2,3)=18");
  CHECK(bound_ell(BoundFamily::Vertex, 1, 2) == 4096);
  CHECK(bound_ell(BoundFamily::Edge, 1, 3) == 6);
  CHECK(bound_ell(BoundFamily::Matching, 2, 3) == 18);
}

TEST_CASE("criterion 13: graph6 round-trips bit-exactly for orders up to five") {
  long failures = 0;
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
      std::string text = to_graph6(g);
      if (!(from_graph6(text) == g) || to_graph6(from_graph6(text)) != text) ++failures;
    }
  }
  report(13, failures == 0, "graph6 byte-exact round trip over every labeled graph, n <= 5");
  CHECK(failures == 0);
}

TEST_CASE("criterion 14: the full small-scale verification sweep stays green and fast") {
  Stopwatch watch;
  std::vector<std::string> ids;
  for (const Claim& c : all_claims()) ids.push_back(c.id);
  std::vector<Report> reports = run_claims(ids, Scale::Small, 20250607);
  int bad = 0;
  for (const Report& r : reports)
    if (r.status != "pass") ++bad;
  bool ok = bad == 0 && watch.seconds() < 300.0;
  report(14, ok, "verify all --scale small passes in under five minutes");
  CHECK(bad == 0);
  CHECK(watch.seconds() < 300.0);
}
