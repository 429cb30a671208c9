#include "circalt/homcore.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace circalt {

Rational::Rational(long long num, long long den) : p(num), q(den) {
    if (q <= 0 || p <= 0) throw std::invalid_argument("rational must be positive");
    long long g = std::gcd(p, q);
    p /= g;
    q /= g;
}

// ---------------------------------------------------------------------------
// maximum clique

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;

    // Greedy coloring of the candidate set; returns vertices ordered so that
    // color numbers are nondecreasing, paired with their color bound.
    void expand(std::uint64_t candidates, int size) {
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        std::vector<int> order;
        std::vector<int> bound;
        std::uint64_t uncolored = candidates;
        int color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t available = uncolored;
            while (available) {
                int v = std::countr_zero(available);
                available &= available - 1;
                available &= ~g.neighbors(v);
                uncolored &= ~(1ull << v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + bound[i] <= best) return;
            int v = order[i];
            expand(candidates & g.neighbors(v), size + 1);
            candidates &= ~(1ull << v);
        }
    }
};

}  // namespace

int clique_number(const Graph& g) {
    CliqueSearch search{g};
    search.expand(g.vertex_mask(), 0);
    return std::max(search.best, 1);
}

// ---------------------------------------------------------------------------
// homomorphisms

bool is_homomorphism(const Graph& g, const Graph& h, const Homomorphism& f) {
    if (static_cast<int>(f.size()) != g.vertex_count()) return false;
    for (int v : f)
        if (v < 0 || v >= h.vertex_count()) return false;
    for (auto [x, y] : g.edges())
        if (!h.adjacent(f[x], f[y])) return false;
    return true;
}

namespace {

struct HomSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> assignment;
    std::vector<std::uint64_t> domain;

    HomSearch(const Graph& g_, const Graph& h_)
        : g(g_), h(h_), assignment(g_.vertex_count(), -1),
          domain(g_.vertex_count(), h_.vertex_mask()) {}

    bool solve() {
        int var = -1, best_count = 1 << 30;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (assignment[v] >= 0) continue;
            int c = std::popcount(domain[v]);
            if (c < best_count) {
                best_count = c;
                var = v;
            }
        }
        if (var < 0) return true;
        for (std::uint64_t values = domain[var]; values;) {
            int a = std::countr_zero(values);
            values &= values - 1;
            assignment[var] = a;
            auto saved = domain;
            bool ok = true;
            for (std::uint64_t m = g.neighbors(var); ok && m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (assignment[w] >= 0) {
                    ok = h.adjacent(a, assignment[w]);
                } else {
                    domain[w] &= h.neighbors(a);
                    ok = domain[w] != 0;
                }
            }
            if (ok && solve()) return true;
            domain = std::move(saved);
            assignment[var] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Homomorphism> hom_exists(const Graph& g, const Graph& h) {
    if (g.has_edges() && !h.has_edges()) return std::nullopt;
    HomSearch search(g, h);
    if (!search.solve()) return std::nullopt;
    return search.assignment;
}

// ---------------------------------------------------------------------------
// cores

namespace {

// Searches for an endomorphism of g that avoids the given vertex.
std::optional<Homomorphism> endomorphism_avoiding(const Graph& g, int avoided) {
    auto [sub, vertices] = induced_subgraph(g, g.vertex_mask() & ~(1ull << avoided));
    auto f = hom_exists(g, sub);
    if (!f) return std::nullopt;
    Homomorphism mapped(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) mapped[v] = vertices[(*f)[v]];
    return mapped;
}

}  // namespace

CoreResult core_of(const Graph& g) {
    auto current = induced_subgraph(g, g.vertex_mask());
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        const Graph& c = current.graph;
        if (c.vertex_count() == 1) break;
        for (int v = 0; v < c.vertex_count() && !shrunk; ++v) {
            auto f = endomorphism_avoiding(c, v);
            if (!f) continue;
            std::uint64_t image = 0;
            for (int x = 0; x < c.vertex_count(); ++x) image |= 1ull << (*f)[x];
            auto next = induced_subgraph(c, image);
            for (int& orig : next.vertices) orig = current.vertices[orig];
            current = std::move(next);
            shrunk = true;
        }
    }
    return {current.graph, current.vertices};
}

// ---------------------------------------------------------------------------
// circular cliques and circular chromatic number

Graph circular_clique(int p, int q) {
    if (q < 1 || p < 2 * q) throw std::invalid_argument("circular clique needs p >= 2q >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("p/q must be in lowest terms");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            int d = j - i;
            d = std::min(d, p - d);
            if (d >= q) edges.emplace_back(i, j);
        }
    return Graph(p, edges);
}

CircularChromaticResult circular_chromatic(const Graph& g) {
    if (!g.has_edges())
        throw std::invalid_argument("circular chromatic number requires at least one edge");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> candidates;
    for (int p = 2; p <= n; ++p)
        for (int q = 1; 2 * q <= p; ++q)
            if (std::gcd(p, q) == 1) candidates.emplace_back(p, q);
    std::sort(candidates.begin(), candidates.end(), [](auto a, auto b) {
        return static_cast<long long>(a.first) * b.second <
               static_cast<long long>(b.first) * a.second;
    });
    for (auto [p, q] : candidates) {
        auto target = circular_clique(p, q);
        if (auto f = hom_exists(g, target))
            return {Rational(p, q), p, q, *f};
    }
    throw std::logic_error("no circular clique admits the graph");  // unreachable: K_n works
}

// ---------------------------------------------------------------------------
// isomorphism

namespace {

bool iso_extend(const Graph& g, const Graph& h, std::vector<int>& map,
                std::uint64_t used, int v) {
    int n = g.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1) continue;
        if (g.degree(v) != h.degree(w)) continue;
        bool ok = true;
        for (int u = 0; ok && u < v; ++u)
            ok = g.adjacent(u, v) == h.adjacent(map[u], w);
        if (!ok) continue;
        map[v] = w;
        if (iso_extend(g, h, map, used | (1ull << w), v + 1)) return true;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    auto degrees = [](const Graph& x) {
        std::vector<int> d;
        for (int v = 0; v < x.vertex_count(); ++v) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g) != degrees(h)) return false;
    std::vector<int> map(g.vertex_count(), -1);
    return iso_extend(g, h, map, 0, 0);
}

}  // namespace circalt
