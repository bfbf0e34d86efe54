#include "sdo/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sdo {

Graph::Graph(VertexId vertex_count) {
    if (vertex_count < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

EdgeId Graph::add_edge(VertexId u, VertexId v, Weight weight, EdgeKind kind) {
    if (!contains(u) || !contains(v)) {
        throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
    }
    if (weight < 0) {
        throw std::invalid_argument("negative edge weight");
    }
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{u, v, weight, kind});
    adjacency_[static_cast<std::size_t>(u)].push_back(id);
    if (u != v) {
        adjacency_[static_cast<std::size_t>(v)].push_back(id);
    }
    return id;
}

std::optional<EdgeId> Graph::find_original_edge(VertexId u, VertexId v) const {
    if (!contains(u) || !contains(v)) {
        return std::nullopt;
    }
    const VertexId from = degree(u) <= degree(v) ? u : v;
    for (EdgeId id : incident(from)) {
        const Edge& e = edge(id);
        if (e.original() && ((e.u == u && e.v == v) || (e.u == v && e.v == u))) {
            return id;
        }
    }
    return std::nullopt;
}

bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.weight == b.weight && a.kind == b.kind;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() &&
           std::equal(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end());
}

bool EdgeSet::empty() const {
    return std::none_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
}

}  // namespace sdo
