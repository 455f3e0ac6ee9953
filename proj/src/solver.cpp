#include "p2t/solver.hpp"

#include <algorithm>
#include <chrono>

#include "p2t/union_find.hpp"

namespace p2t {

namespace {

using Clock = std::chrono::steady_clock;

// Components among non-isolated vertices.
int nontrivial_components(const Graph& g) {
    RollbackUnionFind uf(g.vertex_count());
    std::vector<bool> incident(g.vertex_count(), false);
    for (const auto& [u, v] : g.edges()) {
        uf.unite(u, v);
        incident[u] = incident[v] = true;
    }
    int components = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (incident[u] && uf.find(u) == u) ++components;
    return components;
}

// Edge order: DFS from the lowest canonical vertex, neighbors visited in
// canonical label order, every edge recorded when first encountered.
std::vector<int> dfs_edge_order(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());  // (neighbor, edge)
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges()[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    std::vector<int> canonical_rank(g.vertex_count());
    const auto canonical = g.vertices_in_canonical_order();
    for (int rank = 0; rank < static_cast<int>(canonical.size()); ++rank)
        canonical_rank[canonical[rank]] = rank;
    for (auto& list : adj)
        std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
            return canonical_rank[a.first] < canonical_rank[b.first];
        });

    std::vector<int> order;
    order.reserve(g.edge_count());
    std::vector<bool> edge_seen(g.edge_count(), false), vertex_seen(g.vertex_count(), false);
    auto visit = [&](auto&& self, int u) -> void {
        vertex_seen[u] = true;
        for (const auto& [w, e] : adj[u]) {
            if (!edge_seen[e]) {
                edge_seen[e] = true;
                order.push_back(e);
            }
            if (!vertex_seen[w]) self(self, w);
        }
    };
    for (int start : canonical)
        if (!vertex_seen[start] && !adj[start].empty()) visit(visit, start);
    return order;
}

// Acyclic by construction, so each class is a tree iff nonempty and
// |edges| = |incident vertices| - 1.
bool leaf_accepts(const Graph& g, const std::vector<EdgeClass>& class_of) {
    for (EdgeClass c : {EdgeClass::A, EdgeClass::B}) {
        int edges = 0;
        std::vector<int> verts;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (class_of[e] != c) continue;
            ++edges;
            verts.push_back(g.edges()[e].first);
            verts.push_back(g.edges()[e].second);
        }
        if (edges == 0) return false;
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (edges != static_cast<int>(verts.size()) - 1) return false;
    }
    return true;
}

// Throwaway union-find reset in O(1) via version stamps; used for the
// connectivity prune, which rebuilds its structure at every node.
struct ScratchUnionFind {
    std::vector<int> parent, stamp;
    int version = 0;

    void reset(int n) {
        if (static_cast<int>(parent.size()) < n) {
            parent.resize(n);
            stamp.resize(n, 0);
        }
        ++version;
    }

    int find(int x) {
        if (stamp[x] != version) {
            stamp[x] = version;
            parent[x] = x;
        }
        if (parent[x] == x) return x;
        return parent[x] = find(parent[x]);
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Search {
    const Graph& g;
    const SolveBudget& budget;
    std::vector<int> order;
    std::vector<EdgeClass> class_of;
    RollbackUnionFind uf_a, uf_b;
    ScratchUnionFind scratch;
    SolveStats stats;
    bool timed_out = false;
    Clock::time_point start;

    Search(const Graph& graph, const SolveBudget& b)
        : g(graph),
          budget(b),
          order(dfs_edge_order(graph)),
          class_of(graph.edge_count(), EdgeClass::A),
          uf_a(graph.vertex_count()),
          uf_b(graph.vertex_count()),
          start(Clock::now()) {}

    bool out_of_budget() {
        if (stats.nodes > budget.node_cap) return true;
        if ((stats.nodes & 0x3ff) == 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > budget.seconds)
            return true;
        return false;
    }

    // Prune: a class is dead once its assigned edges can no longer be
    // connected into one tree even with the help of every unassigned edge.
    bool potentially_connected(int pos, EdgeClass c) {
        scratch.reset(g.vertex_count());
        for (int i = pos + 1; i < static_cast<int>(order.size()); ++i) {
            const auto& [u, v] = g.edges()[order[i]];
            scratch.unite(u, v);
        }
        int root = -1;
        for (int i = 0; i <= pos; ++i) {
            const int e = order[i];
            if (class_of[e] != c) continue;
            const auto& [u, v] = g.edges()[e];
            scratch.unite(u, v);
        }
        for (int i = 0; i <= pos; ++i) {
            const int e = order[i];
            if (class_of[e] != c) continue;
            const int r = scratch.find(g.edges()[e].first);
            if (root == -1) root = r;
            if (r != root) return false;
        }
        return true;
    }

    bool place(int pos, int e, EdgeClass c) {
        auto& uf = c == EdgeClass::A ? uf_a : uf_b;
        const auto mark = uf.checkpoint();
        uf.unite(g.edges()[e].first, g.edges()[e].second);
        class_of[e] = c;
        if (potentially_connected(pos, EdgeClass::A) && potentially_connected(pos, EdgeClass::B) &&
            run(pos + 1))
            return true;
        uf.rollback_to(mark);
        return false;
    }

    bool run(int pos) {
        if (timed_out) return false;
        if (pos == static_cast<int>(order.size())) return leaf_accepts(g, class_of);
        ++stats.nodes;
        if (out_of_budget()) {
            timed_out = true;
            return false;
        }
        const int e = order[pos];
        const auto& [u, v] = g.edges()[e];
        bool can_a = !uf_a.same(u, v);
        bool can_b = pos > 0 && !uf_b.same(u, v);  // first edge is fixed to A
        if (!can_a && !can_b) return false;
        if (can_a != can_b) {
            ++stats.propagations;
            return place(pos, e, can_a ? EdgeClass::A : EdgeClass::B);
        }
        return place(pos, e, EdgeClass::A) || place(pos, e, EdgeClass::B);
    }
};

}  // namespace

SolveOutcome solve_p2t(const Graph& g, const SolveBudget& budget) {
    SolveOutcome outcome;
    const auto start = Clock::now();
    if (g.edge_count() < 2 || nontrivial_components(g) > 2) {
        // Each class is a connected tree, so their union has at most two
        // components; fewer than two edges leaves a class empty.
        outcome.status = SolveStatus::NoPartition;
        outcome.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return outcome;
    }
    Search search(g, budget);
    const bool found = search.run(0);
    outcome.stats = search.stats;
    outcome.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (found) {
        outcome.status = SolveStatus::Partition;
        outcome.partition = EdgePartition{search.class_of};
    } else {
        outcome.status = search.timed_out ? SolveStatus::Timeout : SolveStatus::NoPartition;
    }
    return outcome;
}

namespace {

template <typename Visit>
void enumerate_classifications(const Graph& g, int edge_cap, SolveStats& stats, Visit visit) {
    const int m = g.edge_count();
    if (m > edge_cap)
        throw std::invalid_argument("graph has " + std::to_string(m) +
                                    " edges, naive enumeration cap is " + std::to_string(edge_cap));
    if (m == 0) return;
    EdgePartition partition;
    partition.class_of.resize(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        partition.class_of[0] = EdgeClass::A;
        for (int e = 1; e < m; ++e)
            partition.class_of[e] = ((mask >> (e - 1)) & 1) ? EdgeClass::B : EdgeClass::A;
        ++stats.nodes;
        if (!visit(partition)) return;
    }
}

}  // namespace

SolveOutcome solve_p2t_naive(const Graph& g, int edge_cap) {
    SolveOutcome outcome;
    const auto start = Clock::now();
    enumerate_classifications(g, edge_cap, outcome.stats, [&](const EdgePartition& partition) {
        if (verify_two_tree_partition(g, partition).accepted) {
            outcome.status = SolveStatus::Partition;
            outcome.partition = partition;
            return false;
        }
        return true;
    });
    outcome.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return outcome;
}

std::vector<EdgePartition> enumerate_two_tree_partitions(const Graph& g, int edge_cap) {
    std::vector<EdgePartition> accepted;
    SolveStats stats;
    enumerate_classifications(g, edge_cap, stats, [&](const EdgePartition& partition) {
        if (verify_two_tree_partition(g, partition).accepted) accepted.push_back(partition);
        return true;
    });
    return accepted;
}

}  // namespace p2t
