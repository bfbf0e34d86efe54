#include "sdo/departing.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sdo {

namespace {

std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

}  // namespace

std::size_t DepTable::max_entries() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) {
        best = std::max<std::size_t>(best, offsets_[i + 1] - offsets_[i]);
    }
    return best;
}

DepTable build_dep(const Graph& g, const ShortestPathTree& spt_s, const PathOnTree& path,
                   DepStats* stats) {
    if (path.edge_count() == 0 || path.vertices.front() != spt_s.source) {
        throw std::invalid_argument("build_dep needs a non-empty primary path from the source");
    }
    const std::size_t n = idx(g.vertex_count());
    const std::vector<std::int32_t> anchor = path_anchors(spt_s, path);

    DepStats local;
    std::vector<std::vector<DepEntry>> per_vertex(n);
    std::priority_queue<CandidatePath, std::vector<CandidatePath>, std::greater<>> heap;

    for (VertexId v : spt_s.order) {
        if (path.contains(v)) {
            continue;
        }
        const EdgeId last = spt_s.parent_edge[idx(v)];
        heap.push(CandidatePath{spt_s.dist[idx(v)].value(), anchor[idx(v)], v, last,
                                CandidatePath::kInitial});
        ++local.seeds;
    }
    for (std::size_t j = 0; j < path.vertices.size(); ++j) {
        const VertexId u = path.vertices[j];
        const Weight base = spt_s.dist[idx(u)].value();
        for (EdgeId e : g.incident(u)) {
            const VertexId w = g.edge(e).other(u);
            if (path.contains(w)) {
                continue;
            }
            heap.push(CandidatePath{base + g.edge(e).weight, static_cast<std::int32_t>(j), w, e,
                                    CandidatePath::kInitial});
            ++local.path_departures;
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        local.max_degree = std::max(local.max_degree, g.degree(v));
    }

    while (!heap.empty()) {
        const CandidatePath cand = heap.top();
        heap.pop();
        ++local.pops;
        auto& list = per_vertex[idx(cand.end)];
        if (!list.empty() && cand.dp_depth >= list.back().dp_depth) {
            continue;
        }
        const Edge& last = g.edge(cand.last_edge);
        list.push_back(DepEntry{cand.length, path.vertices[static_cast<std::size_t>(cand.dp_depth)],
                                cand.dp_depth, cand.end, cand.last_edge, last.weight});
        ++local.accepted;
        const auto entry_index = static_cast<std::int32_t>(local.accepted - 1);
        for (EdgeId e : g.incident(cand.end)) {
            const VertexId w = g.edge(e).other(cand.end);
            if (path.contains(w)) {
                continue;
            }
            // A candidate whose detour point is not above w's last kept entry
            // can never be kept.
            const auto& target = per_vertex[idx(w)];
            if (!target.empty() && cand.dp_depth >= target.back().dp_depth) {
                continue;
            }
            heap.push(CandidatePath{cand.length + g.edge(e).weight, cand.dp_depth, w, e, entry_index});
            ++local.extension_pushes;
        }
    }

    std::vector<std::uint32_t> offsets(n + 1, 0);
    std::vector<DepEntry> entries;
    entries.reserve(local.accepted);
    for (std::size_t v = 0; v < n; ++v) {
        entries.insert(entries.end(), per_vertex[v].begin(), per_vertex[v].end());
        offsets[v + 1] = static_cast<std::uint32_t>(entries.size());
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return DepTable(std::move(offsets), std::move(entries));
}

Distance query_dep(const DepTable& table, VertexId t, std::int32_t edge_index) {
    const auto entries = table.at(t);
    const auto it = std::partition_point(entries.begin(), entries.end(), [&](const DepEntry& d) {
        return d.dp_depth > edge_index;
    });
    return it == entries.end() ? Distance::unreachable() : Distance(it->length);
}

std::vector<Distance> brute_departing(const Graph& g, const ShortestPathTree& spt_s,
                                      const PathOnTree& path) {
    const std::size_t n = idx(g.vertex_count());
    const std::size_t k = path.edge_count();
    std::vector<Distance> table(n * k, Distance::unreachable());
    if (k == 0) {
        return table;
    }
    // best[t]: running minimum over path positions seen so far.
    std::vector<Distance> best(n, Distance::unreachable());
    for (std::size_t j = 0; j < k; ++j) {
        const VertexId u = path.vertices[j];
        EdgeSet banned(g.edge_count());
        for (VertexId p : path.vertices) {
            if (p == u) {
                continue;
            }
            for (EdgeId e : g.incident(p)) {
                banned.insert(e);
            }
        }
        const ShortestPathTree from_u = dijkstra(g, u, banned);
        for (std::size_t t = 0; t < n; ++t) {
            if (path.contains(static_cast<VertexId>(t))) {
                continue;
            }
            best[t] = std::min(best[t], spt_s.dist[idx(u)] + from_u.dist[t]);
            table[t * k + j] = best[t];
        }
    }
    return table;
}

}  // namespace sdo
