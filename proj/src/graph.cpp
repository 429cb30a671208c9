#include "circalt/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace circalt {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [1, " +
                                    std::to_string(kMaxVertices) + "], got " +
                                    std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
        adj_[u] |= 1ull << v;
        adj_[v] |= 1ull << u;
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
}

int Graph::edge_count() const {
    int total = 0;
    for (auto row : adj_) total += std::popcount(row);
    return total / 2;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

bool Graph::has_edges() const {
    for (auto row : adj_)
        if (row) return true;
    return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~0ull : (1ull << n_) - 1;
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 line", 0);
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw ParseError("truncated graph6 data", pos);
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126) throw ParseError("graph6 character out of range", pos);
        ++pos;
        return c - 63;
    };

    int n = next();
    if (n == 63)
        throw ParseError("multi-byte graph6 size headers are not supported (n > 62)", 0);
    if (n < 1) throw ParseError("graph6 vertex count must be at least 1", 0);

    std::vector<std::pair<int, int>> edges;
    int bits = 0, value = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                value = next();
                bits = 6;
            }
            --bits;
            if ((value >> bits) & 1) edges.emplace_back(u, v);
        }
    }
    if (bits > 0 && (value & ((1 << bits) - 1)) != 0)
        throw ParseError("nonzero padding bits in graph6 data", pos - 1);
    if (pos != line.size()) throw ParseError("trailing bytes after graph6 data", pos);
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bits = 0, value = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + 63));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// edge list / DIMACS

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    int n = 0;
    if (!(in >> tok) || tok != "n" || !(in >> n))
        throw ParseError("expected header \"n <count>\"", 0);
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("dangling endpoint in edge list", 0);
        edges.emplace_back(u, v);
    }
    if (!in.eof()) throw ParseError("unparsable token in edge list", 0);
    return Graph(n, edges);
}

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            int m;
            if (!(ls >> kind >> n >> m) || kind != "edge")
                throw ParseError("bad DIMACS problem line", 0);
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("bad DIMACS edge line", 0);
            if (n < 0) throw ParseError("DIMACS edge before problem line", 0);
            edges.emplace_back(u - 1, v - 1);
        }
    }
    if (n < 0) throw ParseError("missing DIMACS problem line", 0);
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// generators

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartition sides must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

// ---------------------------------------------------------------------------
// connectivity

std::vector<std::uint64_t> components(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t seen = 0;
    std::vector<std::uint64_t> out;
    for (int s = 0; s < n; ++s) {
        if ((seen >> s) & 1) continue;
        std::uint64_t comp = 1ull << s;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

namespace {

struct BlockFinder {
    const Graph& g;
    BlockDecomposition result;
    std::vector<int> depth, low, parent;
    std::vector<std::pair<int, int>> edge_stack;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          depth(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0),
          parent(graph.vertex_count(), -1) {}

    void pop_block(std::pair<int, int> until) {
        std::vector<std::pair<int, int>> block;
        std::uint64_t mask = 0;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            mask |= (1ull << e.first) | (1ull << e.second);
            if (e == until) break;
        }
        result.blocks.push_back(mask);
        result.block_edges.push_back(std::move(block));
    }

    void dfs(int root) {
        // Iterative lowpoint DFS; the recursion state is (vertex, neighbor cursor).
        std::vector<std::pair<int, int>> stack{{root, 0}};
        int d = 0;
        depth[root] = low[root] = d;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [v, next_u] = stack.back();
            if (next_u < g.vertex_count()) {
                int u = next_u++;
                if (!g.adjacent(v, u)) continue;
                if (depth[u] < 0) {
                    parent[u] = v;
                    depth[u] = low[u] = depth[v] + 1;
                    edge_stack.emplace_back(v, u);
                    if (v == root) ++root_children;
                    stack.emplace_back(u, 0);
                } else if (u != parent[v] && depth[u] < depth[v]) {
                    edge_stack.emplace_back(v, u);
                    low[v] = std::min(low[v], depth[u]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= depth[p]) {
                        pop_block({p, v});
                        if (p != root) result.cut_vertices |= 1ull << p;
                    }
                }
            }
        }
        if (root_children >= 2) result.cut_vertices |= 1ull << root;
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.depth[v] < 0) finder.dfs(v);
    // Isolated vertices get their own single-vertex blocks.
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) {
            finder.result.blocks.push_back(1ull << v);
            finder.result.block_edges.emplace_back();
        }
    return finder.result;
}

std::optional<int> girth(const Graph& g) {
    int n = g.vertex_count();
    int best = n + 1;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), par(n, -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (std::uint64_t m = g.neighbors(v); m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    par[u] = v;
                    queue.push_back(u);
                } else if (u != par[v] && v < u) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best > n) return std::nullopt;
    return best;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng * nh > kMaxVertices)
        throw std::invalid_argument("product graph exceeds supported vertex count");
    std::vector<std::pair<int, int>> edges;
    for (int gi = 0; gi < ng; ++gi)
        for (auto [h1, h2] : h.edges())
            edges.emplace_back(product_index(gi, h1, nh), product_index(gi, h2, nh));
    for (int hi = 0; hi < nh; ++hi)
        for (auto [g1, g2] : g.edges())
            edges.emplace_back(product_index(g1, hi, nh), product_index(g2, hi, nh));
    return Graph(ng * nh, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::uint64_t mask) {
    std::vector<int> vertices;
    std::vector<int> new_index(g.vertex_count(), -1);
    for (std::uint64_t m = mask; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        new_index[v] = static_cast<int>(vertices.size());
        vertices.push_back(v);
    }
    if (vertices.empty()) throw std::invalid_argument("empty vertex mask");
    std::vector<std::pair<int, int>> edges;
    for (int v : vertices)
        for (std::uint64_t m = g.neighbors(v) & mask; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (u > v) edges.emplace_back(new_index[v], new_index[u]);
        }
    Graph sub(static_cast<int>(vertices.size()), edges);
    return {std::move(sub), std::move(vertices)};
}

}  // namespace circalt
