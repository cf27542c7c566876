#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brittle/graph.hpp"
#include "brittle/report.hpp"

namespace brittle {

enum class Scale { Small, Medium };
std::optional<Scale> scale_from_name(const std::string& name);

/// One runnable claim. `run` is deterministic for a fixed scale and seed.
struct Claim {
  std::string id;
  std::string description;
  std::function<Report(Scale, std::uint64_t seed)> run;
};

const std::vector<Claim>& all_claims();
const Claim* find_claim(const std::string& id);

/// Convenience used by the CLI and the acceptance suite.
std::vector<Report> run_claims(const std::vector<std::string>& ids, Scale scale,
                               std::uint64_t seed);

// deterministic random instances shared by the harness and the tests
using Rng = std::mt19937_64;
Graph random_graph(int n, double edge_prob, Rng& rng);
Graph random_graph_max_edges(int n, int max_edges, Rng& rng);
VertexSet random_subset(VertexSet pool, Rng& rng);

/// All isomorphism classes of graphs on exactly n vertices (n <= 7),
/// generated by canonical deduplication over all labeled graphs.
std::vector<Graph> all_graphs_on(int n);

/// Connected graphs with exactly `edge_count` edges and no isolated
/// vertices, up to isomorphism.
std::vector<Graph> connected_graphs_with_edges(int edge_count);

/// Connected graphs on exactly `n` vertices, up to isomorphism.
std::vector<Graph> connected_graphs_on(int n);

}  // namespace brittle
