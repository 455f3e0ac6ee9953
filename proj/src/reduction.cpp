#include "p2t/reduction.hpp"

#include <set>

namespace p2t {

Formula ReductionManifest::formula() const {
    Formula f;
    f.num_vars = num_vars;
    for (const auto& clause : clauses) {
        Clause c;
        for (const ClausePosition& pos : clause) c.push_back(pos.literal);
        f.clauses.push_back(std::move(c));
    }
    return f;
}

Reduction reduce(const Formula& f) {
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        if (f.clauses[j].empty())
            throw ReductionError("clause " + std::to_string(j + 1) + " is empty");
        if (f.clauses[j].size() == 1)
            throw ReductionError(
                "reduction undefined for unit clauses (2-cycle would be a multi-edge); "
                "instance is trivially NAE-unsatisfiable");
        for (const Literal& l : f.clauses[j])
            if (l.variable < 1 || l.variable > f.num_vars)
                throw ReductionError("literal variable out of range in clause " +
                                     std::to_string(j + 1));
    }

    const int n = f.num_vars;
    Reduction red;
    Graph& g = red.graph;
    ReductionManifest& manifest = red.manifest;
    manifest.num_vars = n;
    manifest.alpha = VertexLabel::t(-1);
    manifest.omega = VertexLabel::t(n + 1);

    for (int i = -1; i <= n + 1; ++i) g.add_vertex(VertexLabel::t(i));
    for (int i = 0; i <= n + 1; ++i) {
        g.add_vertex(VertexLabel::v(i));
        g.add_vertex(VertexLabel::nv(i));
        manifest.variables.push_back({VertexLabel::t(i - 1), VertexLabel::v(i),
                                      VertexLabel::nv(i), VertexLabel::t(i)});
    }
    for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
        const Clause& clause = f.clauses[j - 1];
        const int k = static_cast<int>(clause.size());
        std::vector<ClausePosition> positions;
        for (int m = 1; m <= k; ++m) {
            g.add_vertex(VertexLabel::p(j, m));
            g.add_vertex(VertexLabel::q(j, m));
            g.add_vertex(VertexLabel::r(j, m));
        }
        for (int m = 1; m <= k; ++m)
            for (int c = 1; c <= 4; ++c) g.add_vertex(VertexLabel::pg(j, m, c));
        for (int m = 1; m <= k; ++m) {
            const Literal& l = clause[m - 1];
            ClausePosition pos;
            pos.p = VertexLabel::p(j, m);
            pos.q = VertexLabel::q(j, m);
            pos.r = VertexLabel::r(j, m);
            for (int c = 1; c <= 4; ++c) pos.pg[c - 1] = VertexLabel::pg(j, m, c);
            pos.literal = l;
            pos.literal_vertex = l.negated ? VertexLabel::nv(l.variable) : VertexLabel::v(l.variable);
            positions.push_back(std::move(pos));
        }
        manifest.clauses.push_back(std::move(positions));
    }

    // Variable gadget cycles, i = 0..n+1.
    for (const VariableGadget& gadget : manifest.variables) {
        g.add_edge(gadget.t_prev, gadget.v);
        g.add_edge(gadget.v, gadget.t);
        g.add_edge(gadget.t_prev, gadget.nv);
        g.add_edge(gadget.nv, gadget.t);
    }
    // Clause gadgets.
    for (const auto& positions : manifest.clauses) {
        const int k = static_cast<int>(positions.size());
        for (int m = 0; m < k; ++m) {
            g.add_edge(positions[m].p, positions[m].q);
            g.add_edge(positions[m].q, positions[(m + 1) % k].p);
        }
        for (const ClausePosition& pos : positions) g.add_edge(pos.r, pos.p);
        for (const ClausePosition& pos : positions) g.add_edge(pos.r, pos.literal_vertex);
        for (const ClausePosition& pos : positions) {
            g.add_edge(pos.r, pos.pg[0]);
            g.add_edge(pos.q, pos.pg[0]);
            g.add_edge(pos.pg[0], pos.pg[1]);
            g.add_edge(pos.pg[1], pos.pg[2]);
            g.add_edge(pos.pg[2], pos.pg[3]);
            g.add_edge(pos.pg[3], pos.pg[0]);
        }
    }
    return red;
}

namespace {

void assign(EdgePartition& partition, const Graph& g, const VertexLabel& a, const VertexLabel& b,
            EdgeClass c) {
    auto e = g.find_edge(a, b);
    if (!e) throw ReductionError("graph is missing edge " + a.str() + " -- " + b.str());
    partition.class_of[*e] = c;
}

}  // namespace

EdgePartition witness_partition(const Formula& f, const Assignment& a, const Graph& g,
                                const ReductionManifest& manifest) {
    if (!is_good(f, a))
        throw std::invalid_argument("assignment is not a good evaluation of the formula");

    const int n = manifest.num_vars;
    // Padding variables x_0 and x_{n+1} count as true.
    auto value = [&](int i) { return i == 0 || i == n + 1 || a.value(i); };

    EdgePartition partition;
    partition.class_of.assign(g.edge_count(), EdgeClass::A);

    for (int i = 0; i <= n + 1; ++i) {
        const VariableGadget& gadget = manifest.variables[i];
        const EdgeClass via_v = value(i) ? EdgeClass::A : EdgeClass::B;
        assign(partition, g, gadget.t_prev, gadget.v, via_v);
        assign(partition, g, gadget.v, gadget.t, via_v);
        assign(partition, g, gadget.t_prev, gadget.nv, opposite(via_v));
        assign(partition, g, gadget.nv, gadget.t, opposite(via_v));
    }
    for (const auto& positions : manifest.clauses) {
        const int k = static_cast<int>(positions.size());
        std::vector<EdgeClass> r_class(k);
        for (int m = 0; m < k; ++m) {
            const ClausePosition& pos = positions[m];
            // The class that owns the literal vertex's gadget edges.
            const bool literal_true = value(pos.literal.variable) != pos.literal.negated;
            const EdgeClass c = literal_true ? EdgeClass::A : EdgeClass::B;
            r_class[m] = c;
            assign(partition, g, pos.literal_vertex, pos.r, c);
            assign(partition, g, pos.r, pos.p, c);
        }
        for (int m = 0; m < k; ++m) {
            const ClausePosition& pos = positions[m];
            assign(partition, g, pos.p, pos.q, opposite(r_class[m]));
            assign(partition, g, pos.q, positions[(m + 1) % k].p, opposite(r_class[m]));
        }
        for (int m = 0; m < k; ++m) {
            const ClausePosition& pos = positions[m];
            const EdgeClass c_r = r_class[m], c_q = opposite(c_r);
            assign(partition, g, pos.r, pos.pg[0], c_r);
            assign(partition, g, pos.q, pos.pg[0], c_q);
            assign(partition, g, pos.pg[0], pos.pg[1], c_r);
            assign(partition, g, pos.pg[1], pos.pg[2], c_r);
            assign(partition, g, pos.pg[0], pos.pg[3], c_q);
            assign(partition, g, pos.pg[3], pos.pg[2], c_q);
        }
    }
    return partition;
}

Assignment extract_assignment(const Graph& g, const ReductionManifest& manifest,
                              const EdgePartition& partition) {
    if (!verify_two_tree_partition(g, partition).accepted)
        throw std::invalid_argument("partition is not an accepted two-tree partition");

    // Classes touching each vertex: bit 0 for A, bit 1 for B.
    std::vector<unsigned> touched(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const unsigned bit = partition.class_of[e] == EdgeClass::A ? 1u : 2u;
        touched[g.edges()[e].first] |= bit;
        touched[g.edges()[e].second] |= bit;
    }
    auto touched_by = [&](const VertexLabel& label) -> unsigned {
        auto id = g.vertex_id(label);
        if (!id) throw ReductionError("graph is missing vertex " + label.str());
        return touched[*id];
    };

    // Normalize: T is the class owning v(0)'s edges.
    const unsigned v0 = touched_by(manifest.variables[0].v);
    if (v0 != 1u && v0 != 2u)
        throw ReductionError("partition valid but violates the theorem's structure: v(0) touched by " +
                             std::string(v0 == 3 ? "both classes" : "no class"));
    const unsigned t_bit = v0;

    Assignment a;
    a.values.resize(manifest.num_vars);
    for (int i = 1; i <= manifest.num_vars; ++i) {
        const unsigned at_v = touched_by(manifest.variables[i].v);
        const unsigned at_nv = touched_by(manifest.variables[i].nv);
        if (at_v == 3 || at_nv == 3 || at_v == 0 || at_nv == 0 || at_v == at_nv)
            throw ReductionError(
                "partition valid but violates the theorem's structure at variable " +
                std::to_string(i));
        a.values[i - 1] = (at_v == t_bit);
    }
    return a;
}

}  // namespace p2t
