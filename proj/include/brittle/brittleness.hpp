#pragma once

#include <stdexcept>
#include <vector>

#include "brittle/connectivity.hpp"
#include "brittle/errors.hpp"
#include "brittle/graph.hpp"

namespace brittle {

/// Partition of a ground set into disjoint nonempty blocks. Elements are
/// ground-set indices: vertex indices, or edge indices in (u<v, lex) order
/// for the edge-ground function.
struct Partition {
  std::vector<std::vector<int>> blocks;
};

/// Checks disjointness, coverage of 0..ground_size-1, nonempty blocks, and
/// the optional block-size cap (pass 0 to skip it).
void validate_partition(const Partition& p, int ground_size, int max_block);

struct WidthResult {
  int width = 0;
  std::vector<int> worst_blocks;  // block indices of a maximizing union
};

/// Maximum of f over all unions of blocks; exhaustive over the 2^(t-1)
/// unions containing block 0 (complements give equal values).
WidthResult partition_width(ConnKind kind, const Graph& g, const Partition& p,
                            int max_blocks = 25);

struct SolverLimits {
  int max_ground = 12;  // exact brittleness search cap
  int max_blocks = 25;  // width enumeration cap
};

struct BrittlenessResult {
  int value = 0;
  Partition partition;            // an optimal partition (lexicographically
                                  // least restricted-growth string among them)
  std::vector<int> worst_union;   // block indices certifying the width
};

/// Exact k-brittleness: minimum f-width over partitions of the ground set
/// into blocks of size at most k. Branch and bound over restricted-growth
/// assignments; a partial assignment is pruned when the width of the
/// sub-instance on the already-assigned elements reaches the incumbent,
/// which is sound because that width can only grow as elements are added.
BrittlenessResult brittleness(ConnKind kind, const Graph& g, int k, SolverLimits limits = {});

/// Independent oracle: enumerates every partition with blocks of size at
/// most k via restricted-growth strings and takes the minimum width.
int brittleness_naive(ConnKind kind, const Graph& g, int k, int max_ground = 9);

struct DeletionCheck {
  bool pass = false;
  int matching_before = 0, matching_after = 0;
  int rank_before = 0, rank_after = 0;
};

/// Checks that deleting v lowers neither the matching nor rank k-brittleness
/// by more than 1.
DeletionCheck deletion_monotonicity_check(const Graph& g, int v, int k, SolverLimits limits = {});

}  // namespace brittle
