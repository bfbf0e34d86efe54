#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdo/graph.hpp"

namespace sdo {

enum class Family : std::uint8_t {
    Tree,          // uniform random tree
    TreeQuarter,   // plus n/4 random chords
    TreeLinear,    // plus n chords
    TreeDense,     // plus n^1.5 / 2 chords
    Grid,
    Gadget,        // rejoin gadget with a random tail
    Sparse,        // tree plus 2n chords, m ~ 3n
};

std::string_view family_name(Family f);
const std::vector<Family>& verify_families();

struct GeneratedGraph {
    std::string description;  // family, size and seed
    Graph graph;
    VertexId source = 0;
};

// All families produce simple, connected, unit-weight graphs with source 0.
// Grids fill the last row partially; Gadget needs n >= 7.
GeneratedGraph generate(Family family, VertexId n, std::uint64_t seed);

// Uniform random labelled tree via a Pruefer sequence.
Graph random_tree(VertexId n, std::uint64_t seed);

// Adds up to k distinct new edges, chosen uniformly among non-edges.
void add_random_chords(Graph& g, std::int64_t k, std::uint64_t seed);

Graph grid_graph(VertexId rows, VertexId cols);

// s=0 with children a=1 and x=2, a with children b=3 and t=4, b-r with r=5,
// and a tail of `tail` vertices hanging off r, plus the chord x-a. With the
// fault (s, a) the only short route to t re-enters the primary path at a.
Graph rejoin_gadget(VertexId tail = 10);

// Instance `index` of a verify run: family cycles through verify_families(),
// n is uniform in [5, max_n].
GeneratedGraph verify_instance(std::uint64_t seed, std::size_t index, VertexId max_n);

}  // namespace sdo
