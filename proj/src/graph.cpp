#include "p2t/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

#include "p2t/union_find.hpp"

namespace p2t {

namespace {

const char* kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::T: return "t";
        case VertexKind::V: return "v";
        case VertexKind::NV: return "nv";
        case VertexKind::P: return "p";
        case VertexKind::Q: return "q";
        case VertexKind::R: return "r";
        case VertexKind::PG: return "pg";
        case VertexKind::Free: return "";
    }
    return "";
}

int kind_arity(VertexKind k) {
    switch (k) {
        case VertexKind::T:
        case VertexKind::V:
        case VertexKind::NV: return 1;
        case VertexKind::P:
        case VertexKind::Q:
        case VertexKind::R: return 2;
        case VertexKind::PG: return 3;
        case VertexKind::Free: return 0;
    }
    return 0;
}

}  // namespace

std::string VertexLabel::str() const {
    if (kind == VertexKind::Free) return name;
    std::ostringstream out;
    out << kind_name(kind) << '(';
    const int arity = kind_arity(kind);
    for (int i = 0; i < arity; ++i) {
        if (i) out << ',';
        out << idx[i];
    }
    out << ')';
    return out.str();
}

VertexLabel VertexLabel::parse(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty vertex label");
    const auto open = token.find('(');
    if (open == std::string::npos) return VertexLabel::free(token);
    if (token.back() != ')')
        throw std::invalid_argument("malformed vertex label '" + token + "'");

    const std::string head = token.substr(0, open);
    VertexKind kind;
    if (head == "t") kind = VertexKind::T;
    else if (head == "v") kind = VertexKind::V;
    else if (head == "nv") kind = VertexKind::NV;
    else if (head == "p") kind = VertexKind::P;
    else if (head == "q") kind = VertexKind::Q;
    else if (head == "r") kind = VertexKind::R;
    else if (head == "pg") kind = VertexKind::PG;
    else throw std::invalid_argument("unknown vertex kind '" + head + "'");

    VertexLabel label{kind, {0, 0, 0}, {}};
    std::istringstream args(token.substr(open + 1, token.size() - open - 2));
    std::string part;
    int count = 0;
    while (std::getline(args, part, ',')) {
        if (count >= kind_arity(kind))
            throw std::invalid_argument("too many indices in '" + token + "'");
        std::size_t pos = 0;
        label.idx[count] = std::stoi(part, &pos);
        if (pos != part.size())
            throw std::invalid_argument("bad index in '" + token + "'");
        ++count;
    }
    if (count != kind_arity(kind))
        throw std::invalid_argument("wrong index count in '" + token + "'");
    return label;
}

int Graph::add_vertex(const VertexLabel& label) {
    auto [it, inserted] = vertex_index_.try_emplace(label, vertex_count());
    if (inserted) vertices_.push_back(label);
    return it->second;
}

int Graph::add_edge(const VertexLabel& a, const VertexLabel& b) {
    if (a == b) throw std::invalid_argument("self-loop at " + a.str());
    const int ia = add_vertex(a);
    const int ib = add_vertex(b);
    const auto key = std::minmax(ia, ib);
    auto [it, inserted] = edge_index_.try_emplace({key.first, key.second}, edge_count());
    if (!inserted)
        throw std::invalid_argument("parallel edge " + a.str() + " -- " + b.str());
    edges_.emplace_back(ia, ib);
    return it->second;
}

std::optional<int> Graph::vertex_id(const VertexLabel& label) const {
    auto it = vertex_index_.find(label);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Graph::find_edge(int a, int b) const {
    const auto key = std::minmax(a, b);
    auto it = edge_index_.find({key.first, key.second});
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Graph::find_edge(const VertexLabel& a, const VertexLabel& b) const {
    auto ia = vertex_id(a), ib = vertex_id(b);
    if (!ia || !ib) return std::nullopt;
    return find_edge(*ia, *ib);
}

std::vector<int> Graph::vertices_in_canonical_order() const {
    std::vector<int> order;
    order.reserve(vertex_index_.size());
    for (const auto& [label, id] : vertex_index_) order.push_back(id);
    return order;
}

std::vector<int> EdgePartition::edges_in(EdgeClass c) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(class_of.size()); ++e)
        if (class_of[e] == c) out.push_back(e);
    return out;
}

EdgePartition EdgePartition::swapped() const {
    EdgePartition out = *this;
    for (EdgeClass& c : out.class_of) c = opposite(c);
    return out;
}

namespace {

void check_subset(const Graph& g, const std::vector<int>& edge_subset) {
    for (int e : edge_subset)
        if (e < 0 || e >= g.edge_count())
            throw std::out_of_range("edge id " + std::to_string(e) + " not in graph");
}

// Vertices incident to the subset, deduplicated.
std::vector<int> incident_vertices(const Graph& g, const std::vector<int>& edge_subset) {
    std::vector<int> verts;
    for (int e : edge_subset) {
        verts.push_back(g.edges()[e].first);
        verts.push_back(g.edges()[e].second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

// First edge (in subset order) whose addition closes a cycle, or -1.
int first_cycle_edge(const Graph& g, const std::vector<int>& edge_subset) {
    RollbackUnionFind uf(g.vertex_count());
    for (int e : edge_subset)
        if (!uf.unite(g.edges()[e].first, g.edges()[e].second)) return e;
    return -1;
}

// Cycle witness: a path within prior edges between the closing edge's
// endpoints, plus the closing edge itself.
std::vector<int> cycle_witness(const Graph& g, const std::vector<int>& edge_subset,
                               int closing_edge) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (int e : edge_subset) {
        if (e == closing_edge) break;
        auto [u, v] = g.edges()[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    const auto [src, dst] = g.edges()[closing_edge];
    std::vector<int> via_edge(g.vertex_count(), -1), parent(g.vertex_count(), -1);
    std::queue<int> queue;
    queue.push(src);
    parent[src] = src;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        if (u == dst) break;
        for (auto [w, e] : adj[u]) {
            if (parent[w] != -1) continue;
            parent[w] = u;
            via_edge[w] = e;
            queue.push(w);
        }
    }
    std::vector<int> cycle{closing_edge};
    for (int u = dst; u != src; u = parent[u]) cycle.push_back(via_edge[u]);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

}  // namespace

bool is_tree(const Graph& g, const std::vector<int>& edge_subset) {
    check_subset(g, edge_subset);
    if (edge_subset.empty()) return false;
    if (first_cycle_edge(g, edge_subset) != -1) return false;
    // Acyclic, so it is a tree iff |E| = |incident vertices| - 1.
    const auto verts = incident_vertices(g, edge_subset);
    return edge_subset.size() == verts.size() - 1;
}

std::string Verdict::message(const Graph& g) const {
    if (accepted) return "accept";
    std::ostringstream out;
    out << "reject: class " << class_char(offending_class);
    switch (reason) {
        case RejectReason::ClassEmpty:
            out << " is empty";
            break;
        case RejectReason::ClassCyclic:
            out << " contains a cycle:";
            for (int e : witness)
                out << ' ' << g.label(g.edges()[e].first).str() << "--"
                    << g.label(g.edges()[e].second).str();
            break;
        case RejectReason::ClassDisconnected:
            out << " splits into components of " << witness.size() << " and "
                << witness_other.size() << " edges";
            break;
    }
    return out.str();
}

Verdict verify_two_tree_partition(const Graph& g, const EdgePartition& partition) {
    if (static_cast<int>(partition.class_of.size()) != g.edge_count())
        throw std::invalid_argument("partition covers " +
                                    std::to_string(partition.class_of.size()) + " edges, graph has " +
                                    std::to_string(g.edge_count()));
    for (EdgeClass c : {EdgeClass::A, EdgeClass::B}) {
        const auto subset = partition.edges_in(c);
        Verdict verdict;
        verdict.offending_class = c;
        if (subset.empty()) {
            verdict.reason = RejectReason::ClassEmpty;
            return verdict;
        }
        if (int closing = first_cycle_edge(g, subset); closing != -1) {
            verdict.reason = RejectReason::ClassCyclic;
            verdict.witness = cycle_witness(g, subset, closing);
            return verdict;
        }
        const auto verts = incident_vertices(g, subset);
        if (subset.size() != verts.size() - 1) {
            // Forest with >= 2 components; report the component of the first
            // edge versus everything else.
            RollbackUnionFind uf(g.vertex_count());
            for (int e : subset) uf.unite(g.edges()[e].first, g.edges()[e].second);
            const int root = uf.find(g.edges()[subset.front()].first);
            verdict.reason = RejectReason::ClassDisconnected;
            for (int e : subset) {
                if (uf.find(g.edges()[e].first) == root)
                    verdict.witness.push_back(e);
                else
                    verdict.witness_other.push_back(e);
            }
            return verdict;
        }
    }
    Verdict verdict;
    verdict.accepted = true;
    return verdict;
}

DegreeReport degree_report(const Graph& g) {
    DegreeReport report;
    for (const VertexLabel& label : g.vertices()) report.degree[label] = 0;
    for (const auto& [u, v] : g.edges()) {
        ++report.degree[g.label(u)];
        ++report.degree[g.label(v)];
    }
    for (const auto& [label, deg] : report.degree)
        report.max_degree = std::max(report.max_degree, deg);
    return report;
}

}  // namespace p2t
