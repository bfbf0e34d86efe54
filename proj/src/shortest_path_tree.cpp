#include "sdo/shortest_path_tree.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace sdo {

namespace {

std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

}  // namespace

ShortestPathTree dijkstra(const Graph& g, VertexId src, const EdgeSet& banned) {
    if (!g.contains(src)) {
        throw std::out_of_range("dijkstra source " + std::to_string(src) + " out of range");
    }
    const auto n = idx(g.vertex_count());
    ShortestPathTree spt;
    spt.source = src;
    spt.dist.assign(n, Distance::unreachable());
    spt.parent.assign(n, kNoVertex);
    spt.parent_edge.assign(n, kNoEdge);
    spt.depth.assign(n, -1);
    spt.order.reserve(n);

    // Tie key for competing parents: (virtual-and-not-from-source, predecessor, edge).
    auto tie_key = [&](VertexId pred, EdgeId e) {
        const bool penalised = !g.edge(e).original() && pred != src;
        return std::make_tuple(penalised ? 1 : 0, pred, e);
    };

    std::vector<std::uint8_t> settled(n, 0);
    using Item = std::pair<Weight, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    spt.dist[idx(src)] = Distance(0);
    heap.emplace(0, src);

    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (settled[idx(u)] || spt.dist[idx(u)] != Distance(d)) {
            continue;
        }
        settled[idx(u)] = 1;
        spt.order.push_back(u);
        spt.depth[idx(u)] = u == src ? 0 : spt.depth[idx(spt.parent[idx(u)])] + 1;

        for (EdgeId e : g.incident(u)) {
            if (banned.contains(e)) {
                continue;
            }
            const Edge& edge = g.edge(e);
            const VertexId w = edge.other(u);
            if (settled[idx(w)]) {
                continue;
            }
            const Distance candidate(d + edge.weight);
            const Distance current = spt.dist[idx(w)];
            if (candidate < current) {
                spt.dist[idx(w)] = candidate;
                spt.parent[idx(w)] = u;
                spt.parent_edge[idx(w)] = e;
                heap.emplace(candidate.value(), w);
            } else if (candidate == current &&
                       tie_key(u, e) < tie_key(spt.parent[idx(w)], spt.parent_edge[idx(w)])) {
                spt.parent[idx(w)] = u;
                spt.parent_edge[idx(w)] = e;
            }
        }
    }
    return spt;
}

LcaIndex::LcaIndex(VertexId root, const std::vector<VertexId>& parent,
                   const std::vector<VertexId>& order) {
    const std::size_t n = parent.size();
    first_.assign(n, -1);
    if (order.empty()) {
        return;
    }
    // Children in increasing id order, via counting sort on parent.
    std::vector<std::int32_t> child_begin(n + 1, 0);
    for (VertexId v : order) {
        if (v != root) {
            ++child_begin[idx(parent[idx(v)]) + 1];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        child_begin[i + 1] += child_begin[i];
    }
    std::vector<VertexId> children(order.size() > 0 ? order.size() - 1 : 0);
    std::vector<std::int32_t> fill(child_begin.begin(), child_begin.end() - 1);
    std::vector<VertexId> sorted_order(order);
    std::sort(sorted_order.begin(), sorted_order.end());
    for (VertexId v : sorted_order) {
        if (v != root) {
            children[static_cast<std::size_t>(fill[idx(parent[idx(v)])]++)] = v;
        }
    }

    tour_.reserve(2 * order.size());
    tour_depth_.reserve(2 * order.size());
    std::vector<std::pair<VertexId, std::int32_t>> stack{{root, child_begin[idx(root)]}};
    std::int32_t d = 0;
    first_[idx(root)] = 0;
    tour_.push_back(root);
    tour_depth_.push_back(0);
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < child_begin[idx(v) + 1]) {
            const VertexId c = children[static_cast<std::size_t>(next++)];
            ++d;
            first_[idx(c)] = static_cast<std::int32_t>(tour_.size());
            tour_.push_back(c);
            tour_depth_.push_back(d);
            stack.emplace_back(c, child_begin[idx(c)]);
        } else {
            stack.pop_back();
            --d;
            if (!stack.empty()) {
                tour_.push_back(stack.back().first);
                tour_depth_.push_back(d);
            }
        }
    }

    const std::size_t len = tour_.size();
    table_.emplace_back(len);
    for (std::size_t i = 0; i < len; ++i) {
        table_[0][i] = static_cast<std::int32_t>(i);
    }
    for (std::size_t k = 1; (std::size_t{1} << k) <= len; ++k) {
        const std::size_t half = std::size_t{1} << (k - 1);
        std::vector<std::int32_t> level(len - (std::size_t{1} << k) + 1);
        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto a = table_[k - 1][i];
            const auto b = table_[k - 1][i + half];
            level[i] = tour_depth_[static_cast<std::size_t>(a)] <= tour_depth_[static_cast<std::size_t>(b)] ? a : b;
        }
        table_.push_back(std::move(level));
    }
}

VertexId LcaIndex::query(VertexId u, VertexId v) const {
    auto lo = static_cast<std::size_t>(first_[idx(u)]);
    auto hi = static_cast<std::size_t>(first_[idx(v)]);
    if (lo > hi) {
        std::swap(lo, hi);
    }
    const std::size_t k = static_cast<std::size_t>(std::bit_width(hi - lo + 1)) - 1;
    const auto a = table_[k][lo];
    const auto b = table_[k][hi + 1 - (std::size_t{1} << k)];
    return tour_[static_cast<std::size_t>(
        tour_depth_[static_cast<std::size_t>(a)] <= tour_depth_[static_cast<std::size_t>(b)] ? a : b)];
}

void build_lca(ShortestPathTree& spt) {
    spt.lca_index = LcaIndex(spt.source, spt.parent, spt.order);
}

VertexId lca(const ShortestPathTree& spt, VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= spt.vertex_count() || v >= spt.vertex_count()) {
        throw std::out_of_range("lca vertex out of range");
    }
    if (!spt.reached(u) || !spt.reached(v)) {
        throw std::invalid_argument("lca of a vertex unreachable from the tree source");
    }
    if (!spt.lca_index.built()) {
        throw std::logic_error("lca index not built");
    }
    return spt.lca_index.query(u, v);
}

PathOnTree tree_path(const ShortestPathTree& spt, VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= spt.vertex_count() || v >= spt.vertex_count() ||
        !spt.reached(u) || !spt.reached(v)) {
        throw std::invalid_argument("tree_path endpoints must be reached vertices");
    }
    PathOnTree path;
    VertexId x = v;
    path.vertices.push_back(x);
    while (x != u) {
        if (spt.depth[idx(x)] <= spt.depth[idx(u)]) {
            throw std::invalid_argument("tree_path: " + std::to_string(u) +
                                        " is not an ancestor of " + std::to_string(v));
        }
        path.edge_ids.push_back(spt.parent_edge[idx(x)]);
        x = spt.parent[idx(x)];
        path.vertices.push_back(x);
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    std::reverse(path.edge_ids.begin(), path.edge_ids.end());
    path.index_of.assign(idx(spt.vertex_count()), -1);
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        path.index_of[idx(path.vertices[i])] = static_cast<std::int32_t>(i);
    }
    return path;
}

bool edge_on_tree_path(const Graph& g, const ShortestPathTree& spt, VertexId t, EdgeId e) {
    if (t < 0 || t >= spt.vertex_count() || !spt.reached(t) || e < 0 || e >= g.edge_count()) {
        return false;
    }
    const Edge& edge = g.edge(e);
    VertexId lower = kNoVertex;
    if (spt.parent_edge[idx(edge.v)] == e) {
        lower = edge.v;
    } else if (spt.parent_edge[idx(edge.u)] == e) {
        lower = edge.u;
    } else {
        return false;
    }
    return lca(spt, lower, t) == lower;
}

std::vector<std::int32_t> path_anchors(const ShortestPathTree& spt, const PathOnTree& path) {
    std::vector<std::int32_t> anchor(idx(spt.vertex_count()), -1);
    for (VertexId v : spt.order) {
        if (path.contains(v)) {
            anchor[idx(v)] = path.position(v);
        } else if (v != spt.source) {
            anchor[idx(v)] = anchor[idx(spt.parent[idx(v)])];
        }
    }
    return anchor;
}

}  // namespace sdo
