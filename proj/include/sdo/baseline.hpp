#pragma once

#include <vector>

#include "sdo/query.hpp"

namespace sdo {

// Distances and shortest-path-tree parents from src, skipping edge `banned`
// (kNoEdge for none). A separate ordered-set Dijkstra; its parent choice
// matches dijkstra() on graphs of Original edges (smaller predecessor id
// among equally short ones).
struct BruteTree {
    std::vector<Distance> dist;
    std::vector<VertexId> parent;
    std::vector<EdgeId> parent_edge;
};
BruteTree brute_dijkstra(const Graph& g, VertexId src, EdgeId banned = kNoEdge);

// d(s, t) in g without edge e.
Distance brute_query(const Graph& g, VertexId s, VertexId t, EdgeId e);

// The ssrp() record list, computed with one banned Dijkstra per tree edge.
std::vector<SsrpRecord> brute_ssrp(const Graph& g, VertexId s);

}  // namespace sdo
