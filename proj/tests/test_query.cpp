#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sdo/baseline.hpp"
#include "sdo/query.hpp"
#include "support.hpp"

using namespace sdo;
using namespace sdo::testing;

namespace {

// Every (t, e) with e on the tree path of t, plus a sample of unrelated edges.
void check_all_queries(const Graph& g, VertexId s) {
    const OracleTree tree = build_oracle(g, s);
    const std::int32_t depth = tree_depth(tree);
    for (VertexId t = 0; t < g.vertex_count(); ++t) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const QueryResult got = query_edge(tree, t, e);
            REQUIRE(got.distance == brute_query(g, s, t, e));
            REQUIRE(got.recursion_depth <= depth);
        }
    }
}

}  // namespace

TEST_CASE("bridge on a path") {
    const OracleTree tree = build_oracle(path_graph(3), 0);
    CHECK(query(tree, 2, 1, 2).distance == Distance::unreachable());
    CHECK(query(tree, 2, 0, 1).distance == Distance::unreachable());
    CHECK(query(tree, 1, 1, 2).distance == Distance(1));
}

TEST_CASE("4-cycle detour") {
    const OracleTree tree = build_oracle(four_cycle(), 0);
    CHECK(query(tree, 2, 0, 1).distance == Distance(2));
    CHECK(query(tree, 1, 0, 1).distance == Distance(3));
    CHECK(query(tree, 2, 1, 2).distance == Distance(2));
    // Off the tree path: unchanged.
    CHECK(query(tree, 1, 2, 3).distance == Distance(1));
}

TEST_CASE("faults on other sides leave distances unchanged") {
    const Graph g = path_graph(9);
    const OracleTree tree = build_oracle(g, 0);
    const OracleNode& root = *tree.root;
    REQUIRE_FALSE(root.leaf());
    const EdgeId n_edge = *g.find_original_edge(6, 7);
    CHECK(classify(root, n_edge) == EdgeClass::N);
    CHECK(query_node(root, 1, n_edge).distance == Distance(1));
    CHECK(query_node(root, 1, n_edge).recursion_depth == 0);
}

TEST_CASE("crossing faults answer the tree distance") {
    const Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 4}});
    const OracleTree tree = build_oracle(g, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (classify(*tree.root, e) != EdgeClass::Crossing) continue;
        for (VertexId t = 0; t < 6; ++t) {
            CHECK(query_node(*tree.root, t, e).distance == tree.root->spt_s.dist[static_cast<std::size_t>(t)]);
        }
    }
}

TEST_CASE("rejoin gadget needs the left recursion") {
    const Graph g = rejoin_gadget(10);
    const OracleTree tree = build_oracle(g, 0);
    const OracleNode& root = *tree.root;
    REQUIRE(root.separator == 5);
    REQUIRE(root.primary_path.vertices == std::vector<VertexId>{0, 1, 3, 5});
    const Distance want = brute_query(g, 0, 4, *g.find_original_edge(0, 1));
    CHECK(want == Distance(3));
    CHECK(query(tree, 4, 0, 1).distance == want);
    QueryOptions off;
    off.rejoin_recursion = false;
    CHECK(query(tree, 4, 0, 1, off).distance == Distance(7));
}

TEST_CASE("query argument errors") {
    const OracleTree tree = build_oracle(path_graph(3), 0);
    CHECK_THROWS_AS(query(tree, 3, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(query(tree, 2, 0, 5), std::out_of_range);
    CHECK_THROWS_AS(query(tree, 2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(query_edge(tree, 2, 2), std::out_of_range);
}

TEST_CASE("other components") {
    const Graph g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});
    const OracleTree tree = build_oracle(g, 0);
    CHECK(query(tree, 4, 0, 1).distance == Distance::unreachable());
    CHECK(query(tree, 2, 3, 4).distance == Distance(1));
    CHECK(query(tree, 1, 0, 1).distance == Distance(2));
}

TEST_CASE("random graphs match brute force for every vertex and edge") {
    std::mt19937_64 rng(31);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const VertexId n = std::uniform_int_distribution<VertexId>(5, 45)(rng);
        check_all_queries(random_connected(n, std::uniform_int_distribution<int>(0, 2 * n)(rng), seed), 0);
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        check_all_queries(random_sparse(40, 50, seed), static_cast<VertexId>(seed % 40));
    }
    check_all_queries(grid_graph(5, 6), 7);
    check_all_queries(rejoin_gadget(12), 0);
}

TEST_CASE("ssrp examples") {
    const auto path = ssrp(build_oracle(path_graph(3), 0));
    const Distance inf = Distance::unreachable();
    CHECK(path == std::vector<SsrpRecord>{{1, 0, 1, inf}, {2, 0, 1, inf}, {2, 1, 2, inf}});

    const auto cyc = ssrp(build_oracle(four_cycle(), 0));
    REQUIRE(cyc.size() == 4);
    CHECK(cyc[0] == SsrpRecord{1, 0, 1, Distance(3)});
    CHECK(cyc[1] == SsrpRecord{2, 0, 1, Distance(2)});
    CHECK(cyc[2] == SsrpRecord{2, 1, 2, Distance(2)});
    CHECK(cyc[3] == SsrpRecord{3, 0, 3, Distance(3)});

    std::ostringstream out;
    write_ssrp_tsv(out, path);
    CHECK(out.str() == "1\t0\t1\tINF\n2\t0\t1\tINF\n2\t1\t2\tINF\n");
}

TEST_CASE("ssrp matches brute_ssrp") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = random_connected(50, static_cast<std::int64_t>(seed * 3), seed);
        const OracleTree tree = build_oracle(g, 0);
        const auto got = ssrp(tree);
        CHECK(got == brute_ssrp(g, 0));
        std::size_t total_depth = 0;
        for (std::int32_t d : tree.root->spt_s.depth) total_depth += static_cast<std::size_t>(d);
        CHECK(got.size() == total_depth);
    }
}
