#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdo/types.hpp"

namespace sdo {

// Original edges come from the input graph (unit weight at the root);
// Virtual edges are shortcuts added while building child graphs.
enum class EdgeKind : std::uint8_t { Original = 0, Virtual = 1 };

struct Edge {
    VertexId u = kNoVertex;
    VertexId v = kNoVertex;
    Weight weight = 1;
    EdgeKind kind = EdgeKind::Original;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool original() const { return kind == EdgeKind::Original; }
};

// Undirected multigraph over dense vertex ids [0, vertex_count).
class Graph {
public:
    Graph() = default;
    explicit Graph(VertexId vertex_count);

    EdgeId add_edge(VertexId u, VertexId v, Weight weight = 1,
                    EdgeKind kind = EdgeKind::Original);

    VertexId vertex_count() const { return static_cast<VertexId>(adjacency_.size()); }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    std::size_t degree(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

    // First Original edge joining u and v, scanning the shorter adjacency list.
    std::optional<EdgeId> find_original_edge(VertexId u, VertexId v) const;

    bool contains(VertexId v) const { return v >= 0 && v < vertex_count(); }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adjacency_;
};

bool operator==(const Edge& a, const Edge& b);

// Membership set over the edge ids of one graph.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(EdgeId edge_count) : bits_(static_cast<std::size_t>(edge_count), 0) {}

    void insert(EdgeId e) { bits_[static_cast<std::size_t>(e)] = 1; }
    bool contains(EdgeId e) const {
        return static_cast<std::size_t>(e) < bits_.size() && bits_[static_cast<std::size_t>(e)] != 0;
    }
    bool empty() const;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace sdo
