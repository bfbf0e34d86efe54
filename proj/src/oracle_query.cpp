#include "sdo/query.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sdo {

namespace {

std::size_t idx(std::int32_t v) { return static_cast<std::size_t>(v); }

QueryResult descend(const ChildLink& child, VertexId t, EdgeId e, const QueryOptions& options) {
    const VertexId ct = child.vertex_map[idx(t)];
    const EdgeId ce = child.edge_map[idx(e)];
    if (ct == kNoVertex || ce == kNoEdge) {
        throw std::logic_error("query: vertex or edge missing from child graph");
    }
    return query_node(*child.node, ct, ce, options);
}

QueryResult at_node(const OracleNode& node, Distance d) { return {d, node.depth}; }

void check_vertex(const Graph& g, VertexId v) {
    if (!g.contains(v)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
}

}  // namespace

QueryResult query_node(const OracleNode& node, VertexId t, EdgeId e, const QueryOptions& options) {
    const auto n = idx(node.vertex_count());
    if (node.leaf()) {
        return at_node(node, node.base_table[idx(e) * n + idx(t)]);
    }
    const Distance direct = node.spt_s.dist[idx(t)];
    switch (classify(node, e)) {
        case EdgeClass::Crossing:
            return at_node(node, direct);
        case EdgeClass::N:
            if (node.side[idx(t)] == Side::M) {
                return at_node(node, direct);
            }
            return descend(node.right, t, e, options);
        case EdgeClass::MOffPrimary:
            if (node.side[idx(t)] != Side::M) {
                return at_node(node, direct);
            }
            return descend(node.left, t, e, options);
        case EdgeClass::MOnPrimary:
            break;
    }

    const std::int32_t i = node.primary_edge_index[idx(e)];
    const PathOnTree& path = node.primary_path;
    const bool on_path = path.contains(t);
    if (on_path ? path.position(t) <= i : node.anchor[idx(t)] <= i) {
        return at_node(node, direct);
    }
    const Distance via_r = node.sr_replacements[idx(i)];
    if (t == node.separator) {
        return at_node(node, via_r);
    }
    QueryResult best = at_node(node, via_r + node.spt_r.dist[idx(t)]);
    if (!on_path) {
        best.distance = std::min(best.distance, query_dep(node.dep, t, i));
    }
    if (options.rejoin_recursion && node.side[idx(t)] == Side::M) {
        const QueryResult left = descend(node.left, t, e, options);
        best.distance = std::min(best.distance, left.distance);
        best.recursion_depth = std::max(best.recursion_depth, left.recursion_depth);
    }
    return best;
}

QueryResult query_edge(const OracleTree& tree, VertexId t, EdgeId e, const QueryOptions& options) {
    const Graph& g = tree.original_graph;
    check_vertex(g, t);
    if (e < 0 || e >= g.edge_count()) {
        throw std::out_of_range("edge " + std::to_string(e) + " out of range");
    }
    const VertexId rt = tree.to_root[idx(t)];
    if (rt == kNoVertex) {
        return {Distance::unreachable(), 0};
    }
    const OracleNode& root = *tree.root;
    const Distance direct = root.spt_s.dist[idx(rt)];
    const EdgeId re = tree.edge_to_root[idx(e)];
    if (re == kNoEdge || !edge_on_tree_path(root.graph, root.spt_s, rt, re)) {
        return {direct, 0};
    }
    return query_node(root, rt, re, options);
}

QueryResult query(const OracleTree& tree, VertexId t, VertexId x, VertexId y,
                  const QueryOptions& options) {
    const Graph& g = tree.original_graph;
    check_vertex(g, t);
    check_vertex(g, x);
    check_vertex(g, y);
    const auto e = g.find_original_edge(x, y);
    if (!e) {
        throw std::invalid_argument("(" + std::to_string(x) + ", " + std::to_string(y) +
                                    ") is not an edge");
    }
    return query_edge(tree, t, *e, options);
}

std::vector<SsrpRecord> ssrp(const OracleTree& tree) {
    std::vector<SsrpRecord> records;
    const OracleNode& root = *tree.root;
    const ShortestPathTree& spt = root.spt_s;
    std::vector<EdgeId> chain;
    for (VertexId t = 0; t < tree.original_graph.vertex_count(); ++t) {
        const VertexId rt = tree.to_root[idx(t)];
        if (rt == kNoVertex || rt == root.source) {
            continue;
        }
        chain.clear();
        for (VertexId v = rt; v != root.source; v = spt.parent[idx(v)]) {
            chain.push_back(spt.parent_edge[idx(v)]);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            const Edge& edge = root.graph.edge(*it);
            const bool u_upper = spt.parent[idx(edge.v)] == edge.u && spt.parent_edge[idx(edge.v)] == *it;
            const VertexId upper = u_upper ? edge.u : edge.v;
            const VertexId lower = u_upper ? edge.v : edge.u;
            records.push_back({t, tree.from_root[idx(upper)], tree.from_root[idx(lower)],
                               query_node(root, rt, *it).distance});
        }
    }
    return records;
}

void write_ssrp_tsv(std::ostream& out, const std::vector<SsrpRecord>& records) {
    for (const SsrpRecord& r : records) {
        out << r.target << '\t' << r.upper << '\t' << r.lower << '\t' << r.distance.to_string()
            << '\n';
    }
}

}  // namespace sdo
