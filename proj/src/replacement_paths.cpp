#include "sdo/replacement_paths.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sdo {

namespace {

struct Offer {
    std::int32_t first;   // lowest path edge index covered
    std::int32_t last;    // highest path edge index covered
    Weight value;
};

}  // namespace

PathReplacementTable replacement_lengths_along_path(const Graph& g, const ShortestPathTree& spt_s,
                                                    const ShortestPathTree& spt_r,
                                                    const PathOnTree& path) {
    const std::size_t k = path.edge_count();
    PathReplacementTable table(k, Distance::unreachable());
    if (k == 0) {
        return table;
    }
    if (path.vertices.front() != spt_s.source || path.vertices.back() != spt_r.source) {
        throw std::invalid_argument("path must run from the source of spt_s to the source of spt_r");
    }

    const std::vector<std::int32_t> anchor = path_anchors(spt_s, path);
    EdgeSet path_edges(g.edge_count());
    for (EdgeId e : path.edge_ids) {
        path_edges.insert(e);
    }

    std::vector<Offer> offers;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (path_edges.contains(id)) {
            continue;
        }
        const Edge& e = g.edge(id);
        VertexId x = e.u;
        VertexId y = e.v;
        std::int32_t ax = anchor[static_cast<std::size_t>(x)];
        std::int32_t ay = anchor[static_cast<std::size_t>(y)];
        if (ax < 0 || ay < 0 || ax == ay) {
            continue;
        }
        if (ax > ay) {
            std::swap(x, y);
            std::swap(ax, ay);
        }
        const Distance value = spt_s.dist[static_cast<std::size_t>(x)] + e.weight +
                               spt_r.dist[static_cast<std::size_t>(y)];
        if (value.finite()) {
            offers.push_back(Offer{ax, ay - 1, value.value()});
        }
    }
    std::sort(offers.begin(), offers.end(),
              [](const Offer& a, const Offer& b) { return a.first < b.first; });

    using Active = std::pair<Weight, std::int32_t>;  // (value, last index covered)
    std::priority_queue<Active, std::vector<Active>, std::greater<>> active;
    std::size_t next = 0;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(k); ++i) {
        while (next < offers.size() && offers[next].first <= i) {
            active.emplace(offers[next].value, offers[next].last);
            ++next;
        }
        while (!active.empty() && active.top().second < i) {
            active.pop();
        }
        if (!active.empty()) {
            table[static_cast<std::size_t>(i)] = Distance(active.top().first);
        }
    }

    for (std::size_t i = 0; i < k; ++i) {
        if (g.edge(path.edge_ids[i]).weight == 0) {
            EdgeSet banned(g.edge_count());
            banned.insert(path.edge_ids[i]);
            table[i] = dijkstra(g, spt_s.source, banned).dist[static_cast<std::size_t>(spt_r.source)];
        }
    }
    return table;
}

}  // namespace sdo
