#pragma once

#include <cstdint>
#include <vector>

#include "sdo/shortest_path_tree.hpp"

namespace sdo {

// Membership of a vertex in the two halves of a separator split. The
// separator itself belongs to both halves.
enum class Side : std::uint8_t { M = 0, N = 1, Both = 2, Outside = 3 };

struct SeparatorSplit {
    VertexId separator = kNoVertex;
    std::vector<Side> side;      // Outside for unreached vertices
    std::size_t m_size = 0;      // |V_M|, counting the separator
    std::size_t n_size = 0;      // |V_N|, counting the separator

    bool in_m(VertexId v) const {
        const Side s = side[static_cast<std::size_t>(v)];
        return s == Side::M || s == Side::Both;
    }
    bool in_n(VertexId v) const {
        const Side s = side[static_cast<std::size_t>(v)];
        return s == Side::N || s == Side::Both;
    }
};

// Splits the reached part of the tree into edge-disjoint subtrees M (holding
// the source) and N (rooted at the separator) sharing only the separator, with
// floor(n/3) <= |V_M|, |V_N| <= ceil(2n/3) + 1.
//
// Descends from the source into the heaviest child while that child's subtree
// has at least ceil(2n/3) vertices. At the stopping vertex, whole child
// subtrees (largest first, ties by smaller id) join N until |V_N| >= floor(n/3);
// at least one child always joins. Throws std::invalid_argument on trees with
// fewer than two reached vertices.
SeparatorSplit find_separator(const ShortestPathTree& spt);

// The balance predicate above, for tests and build-time assertions.
bool split_is_balanced(std::size_t n, std::size_t m_size, std::size_t n_size);

}  // namespace sdo
