#include "sdo/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace sdo {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
    const auto lo = static_cast<std::uint64_t>(std::min(u, v));
    const auto hi = static_cast<std::uint64_t>(std::max(u, v));
    return (lo << 32) | hi;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::seed_seq seq{seed, salt, seed >> 32};
    std::mt19937_64 rng(seq);
    return rng();
}

// The first n cells of a grid `cols` wide, in row-major order.
Graph partial_grid(VertexId n, VertexId cols) {
    Graph g(n);
    for (VertexId v = 0; v < n; ++v) {
        if ((v + 1) % cols != 0 && v + 1 < n) {
            g.add_edge(v, v + 1);
        }
        if (v + cols < n) {
            g.add_edge(v, v + cols);
        }
    }
    return g;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Tree: return "tree";
        case Family::TreeQuarter: return "tree+n/4";
        case Family::TreeLinear: return "tree+n";
        case Family::TreeDense: return "tree+n^1.5/2";
        case Family::Grid: return "grid";
        case Family::Gadget: return "gadget";
        case Family::Sparse: return "sparse";
    }
    return "?";
}

const std::vector<Family>& verify_families() {
    static const std::vector<Family> families = {Family::Tree, Family::TreeQuarter,
                                                 Family::TreeLinear, Family::TreeDense,
                                                 Family::Grid, Family::Gadget};
    return families;
}

Graph random_tree(VertexId n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("random_tree: n must be positive");
    }
    Graph g(n);
    if (n == 1) {
        return g;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    std::vector<VertexId> code(static_cast<std::size_t>(std::max(0, n - 2)));
    for (VertexId& c : code) {
        c = pick(rng);
    }
    std::vector<std::int32_t> degree(static_cast<std::size_t>(n), 1);
    for (VertexId c : code) {
        ++degree[static_cast<std::size_t>(c)];
    }
    // Linear-time decoding: `leaf` is the smallest current leaf.
    VertexId ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) {
        ++ptr;
    }
    VertexId leaf = ptr;
    for (VertexId c : code) {
        g.add_edge(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) {
                ++ptr;
            }
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    return g;
}

void add_random_chords(Graph& g, std::int64_t k, std::uint64_t seed) {
    const std::int64_t n = g.vertex_count();
    std::unordered_set<std::uint64_t> present;
    for (const Edge& e : g.edges()) {
        present.insert(pair_key(e.u, e.v));
    }
    const std::int64_t room = n * (n - 1) / 2 - static_cast<std::int64_t>(present.size());
    k = std::min(k, room);
    if (k <= 0) {
        return;
    }
    std::mt19937_64 rng(seed);
    if (2 * k > room) {
        std::vector<std::pair<VertexId, VertexId>> free;
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = u + 1; v < n; ++v) {
                if (!present.contains(pair_key(u, v))) {
                    free.emplace_back(u, v);
                }
            }
        }
        std::shuffle(free.begin(), free.end(), rng);
        for (std::int64_t i = 0; i < k; ++i) {
            g.add_edge(free[static_cast<std::size_t>(i)].first,
                       free[static_cast<std::size_t>(i)].second);
        }
        return;
    }
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    while (k > 0) {
        const VertexId u = pick(rng);
        const VertexId v = pick(rng);
        if (u == v || !present.insert(pair_key(u, v)).second) {
            continue;
        }
        g.add_edge(u, v);
        --k;
    }
}

Graph grid_graph(VertexId rows, VertexId cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("grid_graph: dimensions must be positive");
    }
    return partial_grid(rows * cols, cols);
}

Graph rejoin_gadget(VertexId tail) {
    if (tail < 1) {
        throw std::invalid_argument("rejoin_gadget: tail must be positive");
    }
    Graph g(6 + tail);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    g.add_edge(3, 5);
    g.add_edge(5, 6);
    for (VertexId v = 6; v + 1 < 6 + tail; ++v) {
        g.add_edge(v, v + 1);
    }
    g.add_edge(2, 1);
    return g;
}

GeneratedGraph generate(Family family, VertexId n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("generate: n must be positive");
    }
    GeneratedGraph out;
    out.description = std::string(family_name(family)) + " n=" + std::to_string(n) +
                      " seed=" + std::to_string(seed);
    const double dn = static_cast<double>(n);
    switch (family) {
        case Family::Tree:
        case Family::TreeQuarter:
        case Family::TreeLinear:
        case Family::TreeDense:
        case Family::Sparse: {
            out.graph = random_tree(n, seed);
            std::int64_t k = 0;
            if (family == Family::TreeQuarter) k = n / 4;
            if (family == Family::TreeLinear) k = n;
            if (family == Family::TreeDense) k = static_cast<std::int64_t>(std::pow(dn, 1.5) / 2);
            if (family == Family::Sparse) k = 2 * static_cast<std::int64_t>(n);
            add_random_chords(out.graph, k, mix(seed, 1));
            break;
        }
        case Family::Grid: {
            const auto rows = std::max<VertexId>(1, static_cast<VertexId>(std::sqrt(dn)));
            out.graph = partial_grid(n, (n + rows - 1) / rows);
            break;
        }
        case Family::Gadget: {
            if (n < 7) {
                throw std::invalid_argument("generate: the gadget family needs n >= 7");
            }
            out.graph = rejoin_gadget(n - 6);
            // Extra chords stay inside the tail so the gadget shape survives.
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<VertexId> pick(6, n - 1);
            std::unordered_set<std::uint64_t> present;
            for (const Edge& e : out.graph.edges()) {
                present.insert(pair_key(e.u, e.v));
            }
            for (VertexId i = 0; i < n / 8; ++i) {
                const VertexId u = pick(rng);
                const VertexId v = pick(rng);
                if (u != v && present.insert(pair_key(u, v)).second) {
                    out.graph.add_edge(u, v);
                }
            }
            break;
        }
    }
    return out;
}

GeneratedGraph verify_instance(std::uint64_t seed, std::size_t index, VertexId max_n) {
    const auto& families = verify_families();
    const Family family = families[index % families.size()];
    const std::uint64_t instance_seed = mix(seed, index);
    std::mt19937_64 rng(instance_seed);
    const VertexId lo = family == Family::Gadget ? 7 : 5;
    std::uniform_int_distribution<VertexId> pick_n(lo, std::max(lo, max_n));
    return generate(family, pick_n(rng), mix(instance_seed, 2));
}

}  // namespace sdo
