#include "sdo/baseline.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace sdo {

BruteTree brute_dijkstra(const Graph& g, VertexId src, EdgeId banned) {
    if (!g.contains(src)) {
        throw std::out_of_range("source " + std::to_string(src) + " out of range");
    }
    const auto n = static_cast<std::size_t>(g.vertex_count());
    BruteTree tree{std::vector<Distance>(n), std::vector<VertexId>(n, kNoVertex),
                   std::vector<EdgeId>(n, kNoEdge)};
    std::vector<bool> done(n, false);
    std::set<std::pair<Weight, VertexId>> frontier;
    tree.dist[static_cast<std::size_t>(src)] = Distance(0);
    frontier.emplace(0, src);
    while (!frontier.empty()) {
        const auto [du, u] = *frontier.begin();
        frontier.erase(frontier.begin());
        done[static_cast<std::size_t>(u)] = true;
        for (EdgeId id : g.incident(u)) {
            if (id == banned) {
                continue;
            }
            const Edge& edge = g.edge(id);
            const VertexId v = edge.other(u);
            const auto vi = static_cast<std::size_t>(v);
            if (done[vi]) {
                continue;
            }
            const Weight cand = du + edge.weight;
            const Distance old = tree.dist[vi];
            bool take = !old.finite() || cand < old.value();
            if (!take && cand == old.value()) {
                take = std::pair(u, id) < std::pair(tree.parent[vi], tree.parent_edge[vi]);
            }
            if (!take) {
                continue;
            }
            if (old.finite()) {
                frontier.erase({old.value(), v});
            }
            tree.dist[vi] = Distance(cand);
            tree.parent[vi] = u;
            tree.parent_edge[vi] = id;
            frontier.emplace(cand, v);
        }
    }
    return tree;
}

Distance brute_query(const Graph& g, VertexId s, VertexId t, EdgeId e) {
    if (!g.contains(t)) {
        throw std::out_of_range("vertex " + std::to_string(t) + " out of range");
    }
    return brute_dijkstra(g, s, e).dist[static_cast<std::size_t>(t)];
}

std::vector<SsrpRecord> brute_ssrp(const Graph& g, VertexId s) {
    const BruteTree tree = brute_dijkstra(g, s);
    const auto n = static_cast<std::size_t>(g.vertex_count());

    // Replacement distances for every tree edge, indexed by its lower endpoint.
    std::vector<std::vector<Distance>> without(n);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (tree.parent[static_cast<std::size_t>(v)] != kNoVertex) {
            without[static_cast<std::size_t>(v)] =
                brute_dijkstra(g, s, tree.parent_edge[static_cast<std::size_t>(v)]).dist;
        }
    }

    std::vector<SsrpRecord> records;
    std::vector<VertexId> chain;
    for (VertexId t = 0; t < g.vertex_count(); ++t) {
        if (t == s || !tree.dist[static_cast<std::size_t>(t)].finite()) {
            continue;
        }
        chain.clear();
        for (VertexId v = t; v != s; v = tree.parent[static_cast<std::size_t>(v)]) {
            chain.push_back(v);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            const auto lower = static_cast<std::size_t>(*it);
            records.push_back({t, tree.parent[lower], *it,
                               without[lower][static_cast<std::size_t>(t)]});
        }
    }
    return records;
}

}  // namespace sdo
