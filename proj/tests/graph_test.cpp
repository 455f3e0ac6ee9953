#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "generators.hpp"
#include "p2t/graph.hpp"
#include "p2t/union_find.hpp"

using namespace p2t;

namespace {

Graph path_abc() {
    Graph g;
    g.add_edge(VertexLabel::free("a"), VertexLabel::free("b"));
    g.add_edge(VertexLabel::free("b"), VertexLabel::free("c"));
    return g;
}

Graph triangle() {
    Graph g;
    g.add_edge(VertexLabel::free("a"), VertexLabel::free("b"));
    g.add_edge(VertexLabel::free("b"), VertexLabel::free("c"));
    g.add_edge(VertexLabel::free("c"), VertexLabel::free("a"));
    return g;
}

Graph square() {
    Graph g;
    g.add_edge(VertexLabel::free("a"), VertexLabel::free("b"));
    g.add_edge(VertexLabel::free("b"), VertexLabel::free("c"));
    g.add_edge(VertexLabel::free("c"), VertexLabel::free("d"));
    g.add_edge(VertexLabel::free("d"), VertexLabel::free("a"));
    return g;
}

EdgePartition partition_of(std::initializer_list<EdgeClass> classes) {
    EdgePartition p;
    p.class_of.assign(classes);
    return p;
}

constexpr EdgeClass A = EdgeClass::A;
constexpr EdgeClass B = EdgeClass::B;

}  // namespace

TEST_CASE("vertex labels render and parse") {
    CHECK(VertexLabel::t(-1).str() == "t(-1)");
    CHECK(VertexLabel::v(2).str() == "v(2)");
    CHECK(VertexLabel::nv(0).str() == "nv(0)");
    CHECK(VertexLabel::p(1, 3).str() == "p(1,3)");
    CHECK(VertexLabel::pg(1, 2, 4).str() == "pg(1,2,4)");
    CHECK(VertexLabel::free("x").str() == "x");

    for (const auto& label :
         {VertexLabel::t(-1), VertexLabel::v(2), VertexLabel::nv(0), VertexLabel::q(4, 1),
          VertexLabel::r(2, 2), VertexLabel::pg(1, 2, 4), VertexLabel::free("hub")})
        CHECK(VertexLabel::parse(label.str()) == label);

    CHECK_THROWS_AS(VertexLabel::parse("t(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(VertexLabel::parse("zz(1)"), std::invalid_argument);
    CHECK_THROWS_AS(VertexLabel::parse("pg(1,2"), std::invalid_argument);
    CHECK_THROWS_AS(VertexLabel::parse(""), std::invalid_argument);
}

TEST_CASE("labels order t before literal vertices before clause vertices") {
    CHECK(VertexLabel::t(-1) < VertexLabel::t(0));
    CHECK(VertexLabel::t(5) < VertexLabel::v(0));
    CHECK(VertexLabel::v(1) < VertexLabel::nv(0));
    CHECK(VertexLabel::nv(3) < VertexLabel::p(1, 1));
    CHECK(VertexLabel::pg(1, 1, 4) < VertexLabel::free("a"));
}

TEST_CASE("graph rejects self-loops and parallel edges") {
    Graph g;
    CHECK_THROWS_AS(g.add_edge(VertexLabel::free("a"), VertexLabel::free("a")),
                    std::invalid_argument);
    g.add_edge(VertexLabel::free("a"), VertexLabel::free("b"));
    CHECK_THROWS_AS(g.add_edge(VertexLabel::free("b"), VertexLabel::free("a")),
                    std::invalid_argument);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("is_tree basics") {
    const Graph tri = triangle();
    CHECK(is_tree(tri, {0}));            // single edge
    CHECK_FALSE(is_tree(tri, {0, 1, 2}));  // cycle
    CHECK_FALSE(is_tree(tri, {}));

    Graph two;
    two.add_edge(VertexLabel::free("a"), VertexLabel::free("b"));
    two.add_edge(VertexLabel::free("c"), VertexLabel::free("d"));
    CHECK_FALSE(is_tree(two, {0, 1}));  // disconnected

    CHECK_THROWS_AS(is_tree(two, {5}), std::out_of_range);
}

TEST_CASE("verifier accepts a split path") {
    const Graph g = path_abc();
    const Verdict verdict = verify_two_tree_partition(g, partition_of({A, B}));
    CHECK(verdict.accepted);
    CHECK(verdict.message(g) == "accept");
}

TEST_CASE("verifier rejects opposite edges of a 4-cycle as disconnected") {
    const Graph g = square();
    const Verdict verdict = verify_two_tree_partition(g, partition_of({A, B, A, B}));
    CHECK_FALSE(verdict.accepted);
    CHECK(verdict.reason == RejectReason::ClassDisconnected);
    CHECK(verdict.witness.size() == 1);
    CHECK(verdict.witness_other.size() == 1);
}

TEST_CASE("verifier accepts a 4-cycle split into two length-2 paths") {
    const Verdict verdict = verify_two_tree_partition(square(), partition_of({A, A, B, B}));
    CHECK(verdict.accepted);
}

TEST_CASE("verifier rejects an empty class") {
    const Verdict verdict = verify_two_tree_partition(path_abc(), partition_of({A, A}));
    CHECK_FALSE(verdict.accepted);
    CHECK(verdict.reason == RejectReason::ClassEmpty);
    CHECK(verdict.offending_class == B);
}

TEST_CASE("verifier reports a cycle witness that is a closed walk") {
    Graph g = triangle();
    g.add_edge(VertexLabel::free("c"), VertexLabel::free("d"));
    const Verdict verdict = verify_two_tree_partition(g, partition_of({A, A, A, B}));
    REQUIRE_FALSE(verdict.accepted);
    CHECK(verdict.reason == RejectReason::ClassCyclic);
    // Every vertex of the witness has even degree within it.
    std::map<int, int> deg;
    for (int e : verdict.witness) {
        ++deg[g.edges()[e].first];
        ++deg[g.edges()[e].second];
    }
    CHECK(verdict.witness.size() >= 3);
    for (const auto& [v, d] : deg) CHECK(d % 2 == 0);
}

TEST_CASE("verifier requires a total partition") {
    CHECK_THROWS_AS(verify_two_tree_partition(path_abc(), partition_of({A})),
                    std::invalid_argument);
}

TEST_CASE("tree edge count equals incident vertices minus one") {
    std::mt19937 rng(61);
    for (int iter = 0; iter < 50; ++iter) {
        const Graph g = testgen::random_graph(rng, 7, 3, 9);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<int> subset;
        for (int e = 0; e < g.edge_count(); ++e)
            if (coin(rng)) subset.push_back(e);
        if (!is_tree(g, subset)) continue;
        std::vector<int> verts;
        for (int e : subset) {
            verts.push_back(g.edges()[e].first);
            verts.push_back(g.edges()[e].second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        CHECK(subset.size() == verts.size() - 1);
    }
}

TEST_CASE("accepted partitions leave at most two components and survive a class swap") {
    std::mt19937 rng(71);
    int accepted_seen = 0;
    for (int iter = 0; iter < 200 && accepted_seen < 20; ++iter) {
        const Graph g = testgen::random_graph(rng, 6, 3, 8);
        EdgePartition p;
        std::uniform_int_distribution<int> coin(0, 1);
        for (int e = 0; e < g.edge_count(); ++e)
            p.class_of.push_back(coin(rng) ? A : B);
        if (!verify_two_tree_partition(g, p).accepted) continue;
        ++accepted_seen;
        CHECK(verify_two_tree_partition(g, p.swapped()).accepted);
        RollbackUnionFind uf(g.vertex_count());
        std::vector<bool> incident(g.vertex_count(), false);
        for (const auto& [u, v] : g.edges()) {
            uf.unite(u, v);
            incident[u] = incident[v] = true;
        }
        int components = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (incident[u] && uf.find(u) == u) ++components;
        CHECK(components <= 2);
    }
    CHECK(accepted_seen > 0);
}

TEST_CASE("degree report on a triangle") {
    const DegreeReport report = degree_report(triangle());
    CHECK(report.max_degree == 2);
    for (const auto& [label, deg] : report.degree) CHECK(deg == 2);
}

TEST_CASE("union-find rollback restores earlier state") {
    RollbackUnionFind uf(6);
    CHECK(uf.unite(0, 1));
    const auto mark = uf.checkpoint();
    CHECK(uf.unite(1, 2));
    CHECK(uf.unite(3, 4));
    CHECK_FALSE(uf.unite(0, 2));
    CHECK(uf.same(0, 2));
    uf.rollback_to(mark);
    CHECK(uf.same(0, 1));
    CHECK_FALSE(uf.same(0, 2));
    CHECK_FALSE(uf.same(3, 4));
}
