#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace p2t {

enum class VertexKind { T, V, NV, P, Q, R, PG, Free };

// Structured vertex label: t(i), v(i), nv(i), p(j,m), q(j,m), r(j,m),
// pg(j,m,c), or a free-form name for harness graphs.
struct VertexLabel {
    VertexKind kind = VertexKind::Free;
    std::array<int, 3> idx{0, 0, 0};
    std::string name;  // Free only

    static VertexLabel t(int i) { return {VertexKind::T, {i, 0, 0}, {}}; }
    static VertexLabel v(int i) { return {VertexKind::V, {i, 0, 0}, {}}; }
    static VertexLabel nv(int i) { return {VertexKind::NV, {i, 0, 0}, {}}; }
    static VertexLabel p(int j, int m) { return {VertexKind::P, {j, m, 0}, {}}; }
    static VertexLabel q(int j, int m) { return {VertexKind::Q, {j, m, 0}, {}}; }
    static VertexLabel r(int j, int m) { return {VertexKind::R, {j, m, 0}, {}}; }
    static VertexLabel pg(int j, int m, int c) { return {VertexKind::PG, {j, m, c}, {}}; }
    static VertexLabel free(std::string n) { return {VertexKind::Free, {0, 0, 0}, std::move(n)}; }

    std::string str() const;
    static VertexLabel parse(const std::string& token);

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
    friend auto operator<=>(const VertexLabel& a, const VertexLabel& b) {
        return std::tie(a.kind, a.idx, a.name) <=> std::tie(b.kind, b.idx, b.name);
    }
};

// Simple undirected labeled graph. Vertices and edges keep insertion order;
// edge endpoint order is preserved for byte-stable serialization.
class Graph {
public:
    int add_vertex(const VertexLabel& label);           // idempotent
    int add_edge(const VertexLabel& a, const VertexLabel& b);  // adds endpoints

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexLabel>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const VertexLabel& label(int vertex_id) const { return vertices_.at(vertex_id); }
    std::optional<int> vertex_id(const VertexLabel& label) const;
    std::optional<int> find_edge(const VertexLabel& a, const VertexLabel& b) const;
    std::optional<int> find_edge(int a, int b) const;

    // Vertex ids sorted by canonical label order.
    std::vector<int> vertices_in_canonical_order() const;

private:
    std::vector<VertexLabel> vertices_;
    std::map<VertexLabel, int> vertex_index_;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::pair<int, int>, int> edge_index_;  // normalized (min,max)
};

enum class EdgeClass : std::uint8_t { A, B };

inline EdgeClass opposite(EdgeClass c) { return c == EdgeClass::A ? EdgeClass::B : EdgeClass::A; }
inline char class_char(EdgeClass c) { return c == EdgeClass::A ? 'A' : 'B'; }

// Total two-way classification of a graph's edges, indexed by edge id.
struct EdgePartition {
    std::vector<EdgeClass> class_of;

    std::vector<int> edges_in(EdgeClass c) const;
    EdgePartition swapped() const;
};

// True iff the edge subset is nonempty, acyclic and connected (a tree in the
// edge-set sense). Throws std::out_of_range for an edge id not in the graph.
bool is_tree(const Graph& g, const std::vector<int>& edge_subset);

enum class RejectReason { ClassEmpty, ClassCyclic, ClassDisconnected };

struct Verdict {
    bool accepted = false;
    RejectReason reason = RejectReason::ClassEmpty;
    EdgeClass offending_class = EdgeClass::A;
    std::vector<int> witness;        // cycle edges, or one component's edges
    std::vector<int> witness_other;  // the other component (disconnected only)

    std::string message(const Graph& g) const;
};

// Accepts iff both classes are trees. Throws std::invalid_argument if the
// partition does not cover exactly the graph's edge set.
Verdict verify_two_tree_partition(const Graph& g, const EdgePartition& partition);

struct DegreeReport {
    std::map<VertexLabel, int> degree;
    int max_degree = 0;
};

DegreeReport degree_report(const Graph& g);

}  // namespace p2t
