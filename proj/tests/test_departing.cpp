#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdo/departing.hpp"
#include "support.hpp"

using namespace sdo;
using namespace sdo::testing;

namespace {

struct Built {
    Graph g;
    ShortestPathTree spt;
    PathOnTree path;
    DepTable dep;
    DepStats stats;
};

Built build(Graph g, VertexId s, VertexId r) {
    Built b{std::move(g), {}, {}, {}, {}};
    b.spt = dijkstra(b.g, s);
    build_lca(b.spt);
    b.path = tree_path(b.spt, s, r);
    b.dep = build_dep(b.g, b.spt, b.path, &b.stats);
    return b;
}

void check_against_brute(const Built& b) {
    const auto brute = brute_departing(b.g, b.spt, b.path);
    const auto k = b.path.edge_count();
    const auto anchor = path_anchors(b.spt, b.path);
    for (VertexId t = 0; t < b.g.vertex_count(); ++t) {
        const auto entries = b.dep.at(t);
        for (std::size_t i = 1; i < entries.size(); ++i) {
            REQUIRE(entries[i - 1].length < entries[i].length);
            REQUIRE(entries[i - 1].dp_depth > entries[i].dp_depth);
        }
        if (b.path.contains(t) || !b.spt.reached(t)) {
            CHECK(entries.empty());
            continue;
        }
        REQUIRE_FALSE(entries.empty());
        CHECK(Distance(entries.front().length) == b.spt.dist[static_cast<std::size_t>(t)]);
        CHECK(entries.front().dp_depth <= anchor[static_cast<std::size_t>(t)]);
        for (const DepEntry& d : entries) {
            CHECK(d.end == t);
            CHECK(b.path.vertices[static_cast<std::size_t>(d.dp_depth)] == d.dp);
            CHECK((b.g.edge(d.last_edge).u == t || b.g.edge(d.last_edge).v == t));
            CHECK(b.g.edge(d.last_edge).weight == d.last_edge_weight);
        }
        for (std::size_t i = 0; i < k; ++i) {
            REQUIRE(query_dep(b.dep, t, static_cast<std::int32_t>(i)) ==
                    brute[static_cast<std::size_t>(t) * k + i]);
        }
    }
}

}  // namespace

TEST_CASE("vertex hanging off the source gets a single entry") {
    // P = 0-1-2-3, t = 4 adjacent to s.
    const Built b = build(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}}), 0, 3);
    const auto entries = b.dep.at(4);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].length == 1);
    CHECK(entries[0].dp == 0);
    for (std::int32_t i = 0; i < 3; ++i) {
        CHECK(query_dep(b.dep, 4, i) == Distance(1));
    }
    check_against_brute(b);
}

TEST_CASE("tied departing paths keep the higher detour point") {
    // s=0, a=1, r=2, x=3, t=4: P = s-a-r, s-x-t and a-t.
    const Built b = build(make_graph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {1, 4}}), 0, 2);
    const auto entries = b.dep.at(4);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].length == 2);
    CHECK(entries[0].dp == 0);
    check_against_brute(b);
}

TEST_CASE("query_dep interval semantics") {
    // Dep(t) = [{4, dp=u2}, {9, dp=u0}] for a single vertex t = 0.
    std::vector<DepEntry> entries = {{4, 12, 2, 0, 0, 1}, {9, 10, 0, 0, 1, 1}};
    const DepTable table({0, 2}, entries);
    CHECK(query_dep(table, 0, 0) == Distance(9));
    CHECK(query_dep(table, 0, 1) == Distance(9));
    CHECK(query_dep(table, 0, 2) == Distance(4));
    CHECK(query_dep(table, 0, 3) == Distance(4));

    const DepTable no_top({0, 1}, {{4, 12, 2, 0, 0, 1}});
    CHECK(query_dep(no_top, 0, 1) == Distance::unreachable());
    const DepTable empty({0, 0}, {});
    CHECK(query_dep(empty, 0, 0) == Distance::unreachable());
}

TEST_CASE("brute_departing on a bridge below the fault") {
    // t = 3 hangs off r = 2 only.
    const Built b = build(make_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 0, 2);
    const auto brute = brute_departing(b.g, b.spt, b.path);
    CHECK(brute[3 * 2 + 0] == Distance::unreachable());
    CHECK(brute[3 * 2 + 1] == Distance::unreachable());
    check_against_brute(b);
}

TEST_CASE("random graphs match brute_departing") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const VertexId n = std::uniform_int_distribution<VertexId>(4, 70)(rng);
        const Graph g = random_connected(n, std::uniform_int_distribution<int>(0, 2 * n)(rng), seed);
        const auto spt = dijkstra(g, 0);
        const VertexId r = spt.order.back();
        if (r == 0) continue;
        const Built b = build(g, 0, r);
        check_against_brute(b);
        CHECK(b.stats.pops == b.stats.seeds + b.stats.path_departures + b.stats.extension_pushes);
        CHECK(b.stats.accepted == b.dep.total_entries());
        CHECK(b.stats.accepted <= b.stats.pops);
        CHECK(b.stats.extension_pushes <= b.stats.accepted * b.stats.max_degree);
    }
}

TEST_CASE("weighted graphs with a virtual source star match brute_departing") {
    std::mt19937_64 rng(23);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const VertexId n = 30;
        const Graph base = random_connected(n, 20, seed);
        Graph h(n + 1);
        for (const Edge& e : base.edges()) h.add_edge(e.u, e.v);
        for (VertexId v = 0; v < n; v += 3) {
            h.add_edge(n, v, std::uniform_int_distribution<Weight>(1, 6)(rng), EdgeKind::Virtual);
        }
        const auto spt = dijkstra(h, n);
        const VertexId r = spt.order.back();
        check_against_brute(build(h, n, r));
    }
}
