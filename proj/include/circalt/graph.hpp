#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace circalt {

// Everything here works on dense 0-based vertex indices with one 64-bit
// adjacency row per vertex, so graphs are capped well below the word size.
inline constexpr int kMaxVertices = 62;

/// Immutable simple graph. Adjacency is symmetric and loop-free by
/// construction; constructors throw std::invalid_argument otherwise.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    bool has_edges() const;
    std::vector<std::pair<int, int>> edges() const;

    /// All vertices as a bit mask.
    std::uint64_t vertex_mask() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;  // cosmetic only, ignored by ==
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what + " (at byte " + std::to_string(offset_) + ")"),
          offset(offset_) {}
    std::size_t offset;
};

// graph6, one graph per line, printable encoding, n <= 62.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// "n <count>" header followed by "u v" lines, 0-based.
Graph parse_edge_list(std::string_view text);

// DIMACS .col style: "p edge n m" header, "e u v" lines, 1-based.
Graph parse_dimacs(std::string_view text);

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);

/// Connected components as vertex masks, sorted by smallest member.
std::vector<std::uint64_t> components(const Graph& g);

struct BlockDecomposition {
    std::vector<std::uint64_t> blocks;  // vertex mask per block
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    std::uint64_t cut_vertices = 0;
};

/// Blocks and cut-vertices via the lowpoint depth-first algorithm.
/// Isolated vertices become single-vertex blocks with no edges.
BlockDecomposition blocks(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// G box H on n_G * n_H vertices; (gi, hi) lives at index gi * n_H + hi.
Graph cartesian_product(const Graph& g, const Graph& h);

inline int product_index(int g_index, int h_index, int n_h) {
    return g_index * n_h + h_index;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // new index -> original vertex
};
InducedSubgraph induced_subgraph(const Graph& g, std::uint64_t mask);

}  // namespace circalt
