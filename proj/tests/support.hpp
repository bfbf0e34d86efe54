#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "sdo/generators.hpp"
#include "sdo/graph.hpp"

namespace sdo::testing {

inline Graph make_graph(VertexId n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

inline Graph path_graph(VertexId n) {
    Graph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

// s=0, u=1, t=2, v=3 on the cycle s-u-t-v-s.
inline Graph four_cycle() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

inline Graph star_graph(VertexId leaves) {
    Graph g(leaves + 1);
    for (VertexId v = 1; v <= leaves; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

// Random connected graph: a random tree plus `chords` extra edges.
inline Graph random_connected(VertexId n, std::int64_t chords, std::uint64_t seed) {
    Graph g = random_tree(n, seed);
    add_random_chords(g, chords, seed * 7919 + 13);
    return g;
}

// Random graph that may be disconnected: a random forest plus chords.
inline Graph random_sparse(VertexId n, std::int64_t m, std::uint64_t seed) {
    Graph g(n);
    add_random_chords(g, m, seed);
    return g;
}

}  // namespace sdo::testing
