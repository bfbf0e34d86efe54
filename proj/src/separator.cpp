#include "sdo/separator.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdo {

namespace {

std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

}  // namespace

bool split_is_balanced(std::size_t n, std::size_t m_size, std::size_t n_size) {
    const std::size_t lo = n / 3;
    const std::size_t hi = (2 * n + 2) / 3 + 1;
    return lo <= m_size && m_size <= hi && lo <= n_size && n_size <= hi && m_size + n_size == n + 1;
}

SeparatorSplit find_separator(const ShortestPathTree& spt) {
    const std::size_t n = spt.reached_count();
    if (n < 2) {
        throw std::invalid_argument("find_separator needs a tree with at least two vertices");
    }
    const std::size_t total = idx(spt.vertex_count());

    std::vector<std::size_t> subtree(total, 0);
    for (auto it = spt.order.rbegin(); it != spt.order.rend(); ++it) {
        const VertexId v = *it;
        subtree[idx(v)] += 1;
        if (v != spt.source) {
            subtree[idx(spt.parent[idx(v)])] += subtree[idx(v)];
        }
    }
    std::vector<std::vector<VertexId>> children(total);
    for (VertexId v : spt.order) {
        if (v != spt.source) {
            children[idx(spt.parent[idx(v)])].push_back(v);
        }
    }
    auto heavier = [&](VertexId a, VertexId b) {
        return subtree[idx(a)] != subtree[idx(b)] ? subtree[idx(a)] > subtree[idx(b)] : a < b;
    };
    for (auto& list : children) {
        std::sort(list.begin(), list.end(), heavier);
    }

    const std::size_t descend_at = (2 * n + 2) / 3;  // ceil(2n/3)
    VertexId r = spt.source;
    while (!children[idx(r)].empty() && subtree[idx(children[idx(r)].front())] >= descend_at) {
        r = children[idx(r)].front();
    }

    SeparatorSplit split;
    split.separator = r;
    split.side.assign(total, Side::Outside);
    for (VertexId v : spt.order) {
        split.side[idx(v)] = Side::M;
    }

    // Mark chosen child subtrees as N; the order vector lists parents first.
    std::vector<std::uint8_t> in_n(total, 0);
    std::size_t n_size = 1;
    for (VertexId c : children[idx(r)]) {
        if (n_size >= n / 3 && n_size > 1) {
            break;
        }
        in_n[idx(c)] = 1;
        n_size += subtree[idx(c)];
    }
    for (VertexId v : spt.order) {
        if (v != spt.source && v != r && in_n[idx(spt.parent[idx(v)])] && spt.parent[idx(v)] != r) {
            in_n[idx(v)] = 1;
        }
        if (in_n[idx(v)]) {
            split.side[idx(v)] = Side::N;
        }
    }
    split.side[idx(r)] = Side::Both;
    split.n_size = n_size;
    split.m_size = n + 1 - n_size;
    return split;
}

}  // namespace sdo
