#pragma once

#include <vector>

#include "sdo/distance.hpp"
#include "sdo/graph.hpp"

namespace sdo {

// Constant-time lowest common ancestor over a rooted tree: Euler tour plus a
// sparse table of range minima on tour depths.
class LcaIndex {
public:
    LcaIndex() = default;
    LcaIndex(VertexId root, const std::vector<VertexId>& parent, const std::vector<VertexId>& order);

    bool built() const { return !first_.empty(); }
    VertexId query(VertexId u, VertexId v) const;

private:
    std::vector<VertexId> tour_;
    std::vector<std::int32_t> tour_depth_;
    std::vector<std::int32_t> first_;
    // table_[k][i]: tour position of the shallowest entry in [i, i + 2^k)
    std::vector<std::vector<std::int32_t>> table_;
};

struct ShortestPathTree {
    VertexId source = kNoVertex;
    std::vector<Distance> dist;
    std::vector<VertexId> parent;      // kNoVertex for the source and unreached vertices
    std::vector<EdgeId> parent_edge;   // kNoEdge likewise
    std::vector<std::int32_t> depth;   // hop depth; -1 when unreached
    std::vector<VertexId> order;       // reached vertices in settle order (parents first)
    LcaIndex lca_index;                // empty until build_lca()

    VertexId vertex_count() const { return static_cast<VertexId>(dist.size()); }
    bool reached(VertexId v) const { return dist[static_cast<std::size_t>(v)].finite(); }
    std::size_t reached_count() const { return order.size(); }
};

// Dijkstra from src with banned edges removed. Parent choice among equally
// short predecessors is canonical: prefer an Original edge (or any edge out
// of src), then the smaller predecessor id, then the smaller edge id. On a
// graph of Original edges this is exactly (distance, predecessor id).
ShortestPathTree dijkstra(const Graph& g, VertexId src, const EdgeSet& banned = {});

void build_lca(ShortestPathTree& spt);

// Throws if u or v is unreached or the index was not built.
VertexId lca(const ShortestPathTree& spt, VertexId u, VertexId v);

// A downward path of the tree, top first.
struct PathOnTree {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edge_ids;          // edge_ids[i] joins vertices[i] and vertices[i + 1]
    std::vector<std::int32_t> index_of;    // vertex id -> position, -1 when off the path

    std::size_t edge_count() const { return edge_ids.size(); }
    bool contains(VertexId v) const {
        return v >= 0 && static_cast<std::size_t>(v) < index_of.size() &&
               index_of[static_cast<std::size_t>(v)] >= 0;
    }
    std::int32_t position(VertexId v) const { return index_of[static_cast<std::size_t>(v)]; }
};

// Path from ancestor u down to v; throws std::invalid_argument otherwise.
PathOnTree tree_path(const ShortestPathTree& spt, VertexId u, VertexId v);

// True iff e is a tree edge whose lower endpoint is t or an ancestor of t.
// Requires build_lca(spt).
bool edge_on_tree_path(const Graph& g, const ShortestPathTree& spt, VertexId t, EdgeId e);

// For every reached vertex, the position on `path` of its deepest ancestor on
// that path (equivalently lca(v, path bottom)); -1 for unreached vertices.
// `path` must start at the tree source.
std::vector<std::int32_t> path_anchors(const ShortestPathTree& spt, const PathOnTree& path);

}  // namespace sdo
