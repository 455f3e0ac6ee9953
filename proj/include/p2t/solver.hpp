#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "p2t/graph.hpp"

namespace p2t {

enum class SolveStatus { Partition, NoPartition, Timeout };

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    double elapsed_seconds = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::NoPartition;
    std::optional<EdgePartition> partition;
    SolveStats stats;
};

struct SolveBudget {
    double seconds = std::numeric_limits<double>::infinity();
    std::uint64_t node_cap = std::numeric_limits<std::uint64_t>::max();
};

// Brute-force oracle: tries all 2^(|E|-1) classifications (first edge fixed
// to class A) in canonical edge order and returns the first accepted one.
// Throws std::invalid_argument above edge_cap.
SolveOutcome solve_p2t_naive(const Graph& g, int edge_cap = 16);

// All accepted partitions under the same enumeration (first edge fixed to A).
std::vector<EdgePartition> enumerate_two_tree_partitions(const Graph& g, int edge_cap = 16);

// Backtracking solver: edges in DFS order from the lowest canonical vertex,
// one rollback union-find per class for acyclicity, cycle-closing placements
// forced into the other class, first edge fixed to class A. A class is
// pruned once its assigned edges cannot be connected into one tree even
// using every unassigned edge; exact connectivity is checked at leaves.
// Sound and complete within the budget; budget exhaustion yields Timeout,
// never NoPartition.
SolveOutcome solve_p2t(const Graph& g, const SolveBudget& budget = {});

}  // namespace p2t
