#include "sdo/serialize.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <type_traits>

namespace sdo {

namespace {

constexpr std::array<char, 8> kMagic = {'S', 'D', 'O', '1', 'O', 'R', 'C', 'L'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint64_t kMaxCount = std::uint64_t{1} << 40;

static_assert(std::endian::native == std::endian::little, "binary format assumes little endian");

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    template <class T>
    void scalar(T value) {
        static_assert(std::is_integral_v<T> || std::is_enum_v<T>);
        out_.write(reinterpret_cast<const char*>(&value), sizeof(T));
    }

    void distance(Distance d) { scalar<std::int64_t>(d.finite() ? d.value() : -1); }

    template <class T>
    void vec(const std::vector<T>& values) {
        scalar<std::uint64_t>(values.size());
        if constexpr (std::is_same_v<T, Distance>) {
            for (Distance d : values) {
                distance(d);
            }
        } else {
            out_.write(reinterpret_cast<const char*>(values.data()),
                       static_cast<std::streamsize>(values.size() * sizeof(T)));
        }
    }

    void graph(const Graph& g) {
        scalar(g.vertex_count());
        scalar(g.edge_count());
        for (const Edge& e : g.edges()) {
            scalar(e.u);
            scalar(e.v);
            scalar(e.weight);
            scalar(e.kind);
        }
    }

    void tree(const ShortestPathTree& spt) {
        scalar(spt.source);
        vec(spt.dist);
        vec(spt.parent);
        vec(spt.parent_edge);
        vec(spt.depth);
        vec(spt.order);
    }

    void node(const OracleNode& node) {
        scalar(node.depth);
        graph(node.graph);
        scalar(node.source);
        tree(node.spt_s);
        scalar(node.separator);
        if (node.leaf()) {
            vec(node.base_table);
            return;
        }
        vec(node.primary_path.vertices);
        vec(node.primary_path.edge_ids);
        tree(node.spt_r);
        vec(node.dist_s_avoiding_gn);
        vec(node.dist_r_avoiding_gm);
        vec(node.sr_replacements);
        vec(node.dep.offsets());
        scalar<std::uint64_t>(node.dep.entries().size());
        for (const DepEntry& d : node.dep.entries()) {
            scalar(d.length);
            scalar(d.dp);
            scalar(d.dp_depth);
            scalar(d.end);
            scalar(d.last_edge);
            scalar(d.last_edge_weight);
        }
        vec(node.side);
        vec(node.edge_side);
        child(node.left);
        child(node.right);
    }

    void child(const ChildLink& link) {
        scalar<std::uint8_t>(link ? 1 : 0);
        if (link) {
            vec(link.vertex_map);
            vec(link.edge_map);
            node(*link.node);
        }
    }

private:
    std::ostream& out_;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    template <class T>
    T scalar() {
        T value{};
        in_.read(reinterpret_cast<char*>(&value), sizeof(T));
        if (!in_) {
            throw OracleFormatError("truncated oracle file");
        }
        return value;
    }

    Distance distance() {
        const auto raw = scalar<std::int64_t>();
        if (raw < -1) {
            throw OracleFormatError("corrupt distance value");
        }
        return raw == -1 ? Distance::unreachable() : Distance(raw);
    }

    std::uint64_t count() {
        const auto n = scalar<std::uint64_t>();
        if (n > kMaxCount) {
            throw OracleFormatError("corrupt length field");
        }
        return n;
    }

    template <class T>
    std::vector<T> vec() {
        const auto n = count();
        std::vector<T> values;
        if constexpr (std::is_same_v<T, Distance>) {
            values.reserve(n);
            for (std::uint64_t i = 0; i < n; ++i) {
                values.push_back(distance());
            }
        } else {
            values.resize(n);
            in_.read(reinterpret_cast<char*>(values.data()),
                     static_cast<std::streamsize>(n * sizeof(T)));
            if (!in_) {
                throw OracleFormatError("truncated oracle file");
            }
        }
        return values;
    }

    Graph graph() {
        const auto n = scalar<VertexId>();
        const auto m = scalar<EdgeId>();
        if (n < 0 || m < 0) {
            throw OracleFormatError("corrupt graph header");
        }
        Graph g(n);
        for (EdgeId i = 0; i < m; ++i) {
            const auto u = scalar<VertexId>();
            const auto v = scalar<VertexId>();
            const auto w = scalar<Weight>();
            const auto kind = scalar<EdgeKind>();
            if (kind != EdgeKind::Original && kind != EdgeKind::Virtual) {
                throw OracleFormatError("corrupt edge kind");
            }
            try {
                g.add_edge(u, v, w, kind);
            } catch (const std::exception& e) {
                throw OracleFormatError(std::string("corrupt edge: ") + e.what());
            }
        }
        return g;
    }

    ShortestPathTree tree() {
        ShortestPathTree spt;
        spt.source = scalar<VertexId>();
        spt.dist = vec<Distance>();
        spt.parent = vec<VertexId>();
        spt.parent_edge = vec<EdgeId>();
        spt.depth = vec<std::int32_t>();
        spt.order = vec<VertexId>();
        return spt;
    }

    std::unique_ptr<OracleNode> node() {
        auto node = std::make_unique<OracleNode>();
        node->depth = scalar<std::int32_t>();
        node->graph = graph();
        node->source = scalar<VertexId>();
        node->spt_s = tree();
        node->separator = scalar<VertexId>();
        if (node->leaf()) {
            node->base_table = vec<Distance>();
            return node;
        }
        node->primary_path.vertices = vec<VertexId>();
        node->primary_path.edge_ids = vec<EdgeId>();
        node->spt_r = tree();
        node->dist_s_avoiding_gn = vec<Distance>();
        node->dist_r_avoiding_gm = vec<Distance>();
        node->sr_replacements = vec<Distance>();
        auto offsets = vec<std::uint32_t>();
        std::vector<DepEntry> entries(count());
        for (DepEntry& d : entries) {
            d.length = scalar<Weight>();
            d.dp = scalar<VertexId>();
            d.dp_depth = scalar<std::int32_t>();
            d.end = scalar<VertexId>();
            d.last_edge = scalar<EdgeId>();
            d.last_edge_weight = scalar<Weight>();
        }
        node->dep = DepTable(std::move(offsets), std::move(entries));
        node->side = vec<Side>();
        node->edge_side = vec<EdgeSide>();
        check_sizes(*node);
        rebuild_derived(*node);
        child(node->left);
        child(node->right);
        return node;
    }

    void child(ChildLink& link) {
        if (scalar<std::uint8_t>() == 0) {
            return;
        }
        link.vertex_map = vec<VertexId>();
        link.edge_map = vec<EdgeId>();
        link.node = node();
    }

private:
    static void check_sizes(const OracleNode& node) {
        const auto n = static_cast<std::size_t>(node.graph.vertex_count());
        const auto m = static_cast<std::size_t>(node.graph.edge_count());
        const bool ok = node.spt_s.dist.size() == n && node.spt_r.dist.size() == n &&
                        node.side.size() == n && node.edge_side.size() == m &&
                        node.primary_path.edge_ids.size() + 1 == node.primary_path.vertices.size();
        if (!ok) {
            throw OracleFormatError("inconsistent node sizes");
        }
        for (VertexId v : node.primary_path.vertices) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                throw OracleFormatError("primary path vertex out of range");
            }
        }
    }

    std::istream& in_;
};

}  // namespace

void save_oracle(std::ostream& out, const OracleTree& tree) {
    out.write(kMagic.data(), kMagic.size());
    Writer w(out);
    w.scalar(kVersion);
    w.graph(tree.original_graph);
    w.scalar(tree.original_source);
    w.vec(tree.to_root);
    w.vec(tree.from_root);
    w.vec(tree.edge_to_root);
    w.node(*tree.root);
}

OracleTree load_oracle(std::istream& in) {
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) {
        throw OracleFormatError("not an oracle file (bad magic)");
    }
    Reader r(in);
    if (const auto version = r.scalar<std::uint32_t>(); version != kVersion) {
        throw OracleFormatError("unsupported oracle format version " + std::to_string(version));
    }
    OracleTree tree;
    tree.original_graph = r.graph();
    tree.original_source = r.scalar<VertexId>();
    tree.to_root = r.vec<VertexId>();
    tree.from_root = r.vec<VertexId>();
    tree.edge_to_root = r.vec<EdgeId>();
    tree.root = r.node();
    if (tree.to_root.size() != static_cast<std::size_t>(tree.original_graph.vertex_count()) ||
        tree.edge_to_root.size() != static_cast<std::size_t>(tree.original_graph.edge_count())) {
        throw OracleFormatError("inconsistent root maps");
    }
    build_lca(tree.root->spt_s);
    return tree;
}

std::string serialize_oracle(const OracleTree& tree) {
    std::ostringstream out(std::ios::binary);
    save_oracle(out, tree);
    return std::move(out).str();
}

OracleTree deserialize_oracle(const std::string& bytes) {
    std::istringstream in(bytes, std::ios::binary);
    return load_oracle(in);
}

void save_oracle_file(const std::string& path, const OracleTree& tree) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    save_oracle(out, tree);
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

OracleTree load_oracle_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return load_oracle(in);
}

bool is_oracle_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    return in && magic == kMagic;
}

}  // namespace sdo
