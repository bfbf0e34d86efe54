#pragma once

#include <vector>

#include "sdo/shortest_path_tree.hpp"

namespace sdo {

// entry[i]: shortest s->r length in the graph without path edge i.
using PathReplacementTable = std::vector<Distance>;

// Replacement lengths from the tree source s to the bottom r of `path`, one
// per path edge. A graph edge (x, y) other than path edge i that crosses the
// cut left by removing edge i (anchor(x) <= i < anchor(y)) offers
// dist_s(x) + w(x, y) + dist_r(y); the answer is the minimum offer. Offers are
// resolved by an offline sweep over path positions with a lazy min-heap, so
// the whole table costs O(m log m).
//
// The cut argument needs the removed edge to have positive weight. A
// zero-weight path edge (possible only for a Virtual first edge) is resolved
// by one banned-edge Dijkstra instead.
PathReplacementTable replacement_lengths_along_path(const Graph& g, const ShortestPathTree& spt_s,
                                                    const ShortestPathTree& spt_r,
                                                    const PathOnTree& path);

}  // namespace sdo
