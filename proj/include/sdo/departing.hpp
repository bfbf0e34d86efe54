#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "sdo/shortest_path_tree.hpp"

namespace sdo {

// One candidate departing path: it follows the primary path from the source
// down to its detour point, then leaves the path for good and ends at `end`.
struct DepEntry {
    Weight length = 0;
    VertexId dp = kNoVertex;        // detour point, on the primary path
    std::int32_t dp_depth = 0;      // position of dp on the primary path
    VertexId end = kNoVertex;
    EdgeId last_edge = kNoEdge;
    Weight last_edge_weight = 0;

    friend bool operator==(const DepEntry&, const DepEntry&) = default;
};

// Heap element of the construction. Ordered by (length, dp_depth), so a
// detour point closer to the source wins ties, then by end and last edge.
struct CandidatePath {
    static constexpr std::int32_t kInitial = -1;

    Weight length = 0;
    std::int32_t dp_depth = 0;
    VertexId end = kNoVertex;
    EdgeId last_edge = kNoEdge;
    std::int32_t predecessor_entry = kInitial;  // index into the builder's entry list

    friend auto operator<=>(const CandidatePath& a, const CandidatePath& b) {
        return std::tie(a.length, a.dp_depth, a.end, a.last_edge) <=>
               std::tie(b.length, b.dp_depth, b.end, b.last_edge);
    }
    friend bool operator==(const CandidatePath& a, const CandidatePath& b) {
        return (a <=> b) == 0;
    }
};

struct DepStats {
    std::size_t seeds = 0;             // shortest-path seeds, one per reached off-path vertex
    std::size_t path_departures = 0;   // one-edge departures straight off the primary path
    std::size_t extension_pushes = 0;
    std::size_t pops = 0;
    std::size_t accepted = 0;
    std::size_t max_degree = 0;
};

// DEP arrays for every vertex, stored contiguously. For a vertex t the
// entries have strictly increasing length and strictly decreasing dp_depth,
// and entry i is the best departing path for every primary edge between
// Dp(entry i) and Dp(entry i - 1). Vertices on the primary path have none.
class DepTable {
public:
    DepTable() = default;
    DepTable(std::vector<std::uint32_t> offsets, std::vector<DepEntry> entries)
        : offsets_(std::move(offsets)), entries_(std::move(entries)) {}

    std::span<const DepEntry> at(VertexId t) const {
        const auto i = static_cast<std::size_t>(t);
        return std::span<const DepEntry>(entries_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
    }
    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t total_entries() const { return entries_.size(); }
    std::size_t max_entries() const;

    const std::vector<std::uint32_t>& offsets() const { return offsets_; }
    const std::vector<DepEntry>& entries() const { return entries_; }

    friend bool operator==(const DepTable&, const DepTable&) = default;

private:
    std::vector<std::uint32_t> offsets_;
    std::vector<DepEntry> entries_;
};

// Label-setting search over (vertex, detour point) states. Every reached
// off-path vertex is seeded with its tree path (detour point = its deepest
// ancestor on the primary path), and every edge leaving a primary-path vertex
// u_j for an off-path vertex is seeded as a departure at u_j. A popped
// candidate is kept iff its detour point is strictly above that of the last
// kept entry of its end vertex; kept candidates are extended along edges to
// off-path neighbours. Requires a non-empty primary path starting at the
// tree source.
DepTable build_dep(const Graph& g, const ShortestPathTree& spt_s, const PathOnTree& path,
                   DepStats* stats = nullptr);

// Shortest candidate departing path to t that avoids primary edge
// `edge_index` (edge i joins path positions i and i+1): the first entry whose
// detour point sits at or above position edge_index. Unreachable if none.
Distance query_dep(const DepTable& table, VertexId t, std::int32_t edge_index);

// Independent oracle: for each path position j, a Dijkstra from u_j with all
// other primary-path vertices removed; departing(t, i) is the minimum over
// j <= i of dist_s(u_j) + that distance. Returns a row-major table
// [t * edge_count + i]; rows of path vertices are Unreachable.
std::vector<Distance> brute_departing(const Graph& g, const ShortestPathTree& spt_s,
                                      const PathOnTree& path);

}  // namespace sdo
