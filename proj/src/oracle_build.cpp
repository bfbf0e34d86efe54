#include "sdo/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sdo {

namespace {

std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

void fill_leaf(OracleNode& node) {
    const Graph& g = node.graph;
    const auto n = idx(g.vertex_count());
    node.base_table.assign(idx(g.edge_count()) * n, Distance::unreachable());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!g.edge(e).original()) {
            continue;
        }
        EdgeSet banned(g.edge_count());
        banned.insert(e);
        const ShortestPathTree without = dijkstra(g, node.source, banned);
        std::copy(without.dist.begin(), without.dist.end(),
                  node.base_table.begin() + static_cast<std::ptrdiff_t>(idx(e) * n));
    }
}

EdgeSide side_of_edge(const std::vector<Side>& side, VertexId r, const Edge& e) {
    VertexId a = e.u;
    VertexId b = e.v;
    if (a == r) {
        std::swap(a, b);
    }
    if (a == r) {
        return EdgeSide::M;  // loop at the separator
    }
    if (b == r) {
        return side[idx(a)] == Side::N ? EdgeSide::N : EdgeSide::M;
    }
    const Side sa = side[idx(a)];
    const Side sb = side[idx(b)];
    if (sa == sb) {
        return sa == Side::N ? EdgeSide::N : EdgeSide::M;
    }
    return EdgeSide::Crossing;
}

}  // namespace

void rebuild_derived(OracleNode& node) {
    if (node.leaf()) {
        return;
    }
    auto& path = node.primary_path;
    path.index_of.assign(idx(node.graph.vertex_count()), -1);
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        path.index_of[idx(path.vertices[i])] = static_cast<std::int32_t>(i);
    }
    node.anchor = path_anchors(node.spt_s, path);
    node.primary_edge_index.assign(idx(node.graph.edge_count()), -1);
    for (std::size_t i = 0; i < path.edge_ids.size(); ++i) {
        node.primary_edge_index[idx(path.edge_ids[i])] = static_cast<std::int32_t>(i);
    }
}

EdgeClass classify(const OracleNode& node, EdgeId e) {
    if (e < 0 || e >= node.graph.edge_count()) {
        throw std::out_of_range("classify: edge " + std::to_string(e) + " is not in the node graph");
    }
    if (node.leaf()) {
        throw std::logic_error("classify on a leaf node");
    }
    switch (node.edge_side[idx(e)]) {
        case EdgeSide::M:
            return node.primary_edge_index[idx(e)] >= 0 ? EdgeClass::MOnPrimary
                                                        : EdgeClass::MOffPrimary;
        case EdgeSide::N:
            return EdgeClass::N;
        case EdgeSide::Crossing:
            break;
    }
    return EdgeClass::Crossing;
}

ChildGraph make_left_child(const OracleNode& node) {
    const Graph& g = node.graph;
    ChildGraph child;
    child.vertex_map.assign(idx(g.vertex_count()), kNoVertex);
    VertexId next = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (node.side[idx(v)] == Side::M || node.side[idx(v)] == Side::Both) {
            child.vertex_map[idx(v)] = next++;
        }
    }
    child.graph = Graph(next);
    child.edge_map.assign(idx(g.edge_count()), kNoEdge);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (node.edge_side[idx(e)] != EdgeSide::M) {
            continue;
        }
        const Edge& edge = g.edge(e);
        child.edge_map[idx(e)] = child.graph.add_edge(child.vertex_map[idx(edge.u)],
                                                      child.vertex_map[idx(edge.v)], edge.weight,
                                                      edge.kind);
    }
    const VertexId r = node.separator;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == r || child.vertex_map[idx(v)] == kNoVertex || !node.dist_r_avoiding_gm[idx(v)].finite()) {
            continue;
        }
        child.graph.add_edge(child.vertex_map[idx(r)], child.vertex_map[idx(v)],
                             node.dist_r_avoiding_gm[idx(v)].value(), EdgeKind::Virtual);
    }
    child.source = child.vertex_map[idx(node.source)];
    return child;
}

ChildGraph make_right_child(const OracleNode& node) {
    const Graph& g = node.graph;
    const VertexId r = node.separator;
    ChildGraph child;
    child.vertex_map.assign(idx(g.vertex_count()), kNoVertex);
    VertexId next = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (node.side[idx(v)] == Side::N || node.side[idx(v)] == Side::Both) {
            child.vertex_map[idx(v)] = next++;
        }
    }
    const bool fresh_source = node.source != r;
    child.graph = Graph(fresh_source ? next + 1 : next);
    child.source = fresh_source ? next : child.vertex_map[idx(node.source)];
    child.edge_map.assign(idx(g.edge_count()), kNoEdge);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (node.edge_side[idx(e)] != EdgeSide::N) {
            continue;
        }
        const Edge& edge = g.edge(e);
        child.edge_map[idx(e)] = child.graph.add_edge(child.vertex_map[idx(edge.u)],
                                                      child.vertex_map[idx(edge.v)], edge.weight,
                                                      edge.kind);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const VertexId mapped = child.vertex_map[idx(v)];
        if (mapped == kNoVertex || mapped == child.source || !node.dist_s_avoiding_gn[idx(v)].finite()) {
            continue;
        }
        child.graph.add_edge(child.source, mapped, node.dist_s_avoiding_gn[idx(v)].value(),
                             EdgeKind::Virtual);
    }
    return child;
}

std::unique_ptr<OracleNode> build_node(Graph g_hat, VertexId s, std::int32_t depth,
                                       const BuildOptions& options) {
    auto node = std::make_unique<OracleNode>();
    node->depth = depth;
    node->graph = std::move(g_hat);
    node->source = s;
    node->spt_s = dijkstra(node->graph, s);

    const Graph& g = node->graph;
    const auto n = idx(g.vertex_count());
    if (node->spt_s.reached_count() != n) {
        throw std::invalid_argument("build_node: every vertex must be reachable from the source");
    }
    if (n <= 2 || (depth > 0 && n <= options.leaf_size)) {
        fill_leaf(*node);
        return node;
    }

    SeparatorSplit split = find_separator(node->spt_s);
    const VertexId r = split.separator;
    const std::size_t right_size = split.n_size + (r != s ? 1 : 0);
    if (depth > 0 && (split.m_size >= n || right_size >= n)) {
        fill_leaf(*node);
        return node;
    }

    node->separator = r;
    node->side = std::move(split.side);
    node->primary_path = tree_path(node->spt_s, s, r);
    node->spt_r = dijkstra(g, r);

    node->edge_side.resize(idx(g.edge_count()));
    EdgeSet gm_edges(g.edge_count());
    EdgeSet gn_edges(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeSide es = side_of_edge(node->side, r, g.edge(e));
        node->edge_side[idx(e)] = es;
        if (es == EdgeSide::M) {
            gm_edges.insert(e);
        } else if (es == EdgeSide::N) {
            gn_edges.insert(e);
        }
    }
    rebuild_derived(*node);

    node->dist_s_avoiding_gn = dijkstra(g, s, gn_edges).dist;
    node->dist_r_avoiding_gm = dijkstra(g, r, gm_edges).dist;
    if (node->primary_path.edge_count() > 0) {
        node->sr_replacements =
            replacement_lengths_along_path(g, node->spt_s, node->spt_r, node->primary_path);
        node->dep = build_dep(g, node->spt_s, node->primary_path);
    }

    ChildGraph left = make_left_child(*node);
    node->left.vertex_map = std::move(left.vertex_map);
    node->left.edge_map = std::move(left.edge_map);
    node->left.node = build_node(std::move(left.graph), left.source, depth + 1, options);

    ChildGraph right = make_right_child(*node);
    node->right.vertex_map = std::move(right.vertex_map);
    node->right.edge_map = std::move(right.edge_map);
    node->right.node = build_node(std::move(right.graph), right.source, depth + 1, options);
    return node;
}

OracleTree build_oracle(const Graph& g, VertexId s, const BuildOptions& options) {
    if (!g.contains(s)) {
        throw std::out_of_range("source " + std::to_string(s) + " out of range");
    }
    OracleTree tree;
    tree.original_graph = g;
    tree.original_source = s;

    const ShortestPathTree reach = dijkstra(g, s);
    tree.to_root.assign(idx(g.vertex_count()), kNoVertex);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (reach.reached(v)) {
            tree.to_root[idx(v)] = static_cast<VertexId>(tree.from_root.size());
            tree.from_root.push_back(v);
        }
    }
    Graph root_graph(static_cast<VertexId>(tree.from_root.size()));
    tree.edge_to_root.assign(idx(g.edge_count()), kNoEdge);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (tree.to_root[idx(edge.u)] != kNoVertex && tree.to_root[idx(edge.v)] != kNoVertex) {
            tree.edge_to_root[idx(e)] = root_graph.add_edge(
                tree.to_root[idx(edge.u)], tree.to_root[idx(edge.v)], edge.weight, edge.kind);
        }
    }
    tree.root = build_node(std::move(root_graph), tree.to_root[idx(s)], 0, options);
    build_lca(tree.root->spt_s);
    return tree;
}

std::int32_t tree_depth(const OracleTree& tree) {
    std::int32_t deepest = 0;
    for_each_node(tree, [&](const OracleNode& node) { deepest = std::max(deepest, node.depth); });
    return deepest;
}

std::size_t node_count(const OracleTree& tree) {
    std::size_t count = 0;
    for_each_node(tree, [&](const OracleNode&) { ++count; });
    return count;
}

void for_each_node(const OracleTree& tree, const std::function<void(const OracleNode&)>& fn) {
    std::vector<const OracleNode*> stack;
    if (tree.root) {
        stack.push_back(tree.root.get());
    }
    while (!stack.empty()) {
        const OracleNode* node = stack.back();
        stack.pop_back();
        fn(*node);
        if (node->right) {
            stack.push_back(node->right.node.get());
        }
        if (node->left) {
            stack.push_back(node->left.node.get());
        }
    }
}

}  // namespace sdo
