#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "p2t/formula.hpp"
#include "p2t/graph.hpp"

namespace p2t {

struct ReductionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Labels of one variable gadget L_i: the 4-cycle t(i-1), v(i), t(i), nv(i).
struct VariableGadget {
    VertexLabel t_prev, v, nv, t;
};

// Labels of clause j, position m: the cycle vertices p, q, the attachment
// vertex r, the four purple-gadget corners, and the literal vertex r joins.
struct ClausePosition {
    VertexLabel p, q, r;
    std::array<VertexLabel, 4> pg;
    VertexLabel literal_vertex;  // v(i) or nv(i)
    Literal literal;
};

struct ReductionManifest {
    int num_vars = 0;
    VertexLabel alpha, omega;
    std::vector<VariableGadget> variables;            // index i = 0..n+1
    std::vector<std::vector<ClausePosition>> clauses;  // [j-1][m-1]

    // The formula the manifest encodes (clause/literal order preserved).
    Formula formula() const;
};

struct Reduction {
    Graph graph;
    ReductionManifest manifest;
};

// Build the gadget graph. Requires every clause to have size >= 2; a unit
// clause would degenerate the 2k-cycle into a parallel edge.
// |V| = 3n+7+7K and |E| = 4n+8+10K where K is the total clause size.
Reduction reduce(const Formula& f);

// Completeness direction: turn a good evaluation into a two-tree partition
// (class A plays T, class B plays F). Throws std::invalid_argument if the
// assignment is not good for f.
EdgePartition witness_partition(const Formula& f, const Assignment& a, const Graph& g,
                                const ReductionManifest& manifest);

// Soundness direction: recover the assignment from an accepted partition,
// normalized so that the class touching v(0) plays T. Throws
// std::invalid_argument if the partition is not accepted, and ReductionError
// if it is accepted but violates the structure the theorem guarantees.
Assignment extract_assignment(const Graph& g, const ReductionManifest& manifest,
                              const EdgePartition& partition);

}  // namespace p2t
