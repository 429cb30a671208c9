#include "circalt/monotonic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace circalt {

CircularOrdering CircularOrdering::from_seq(std::vector<int> s) {
    int n = static_cast<int>(s.size());
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
        int v = s[k];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("ordering is not a permutation of 0..n-1");
        pos[v] = k;
    }
    return {std::move(s), std::move(pos)};
}

CircularOrdering CircularOrdering::identity(int n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    return {s, s};
}

CircularOrdering CircularOrdering::rotated(int k) const {
    int n = size();
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = seq[(i + k) % n];
    return from_seq(std::move(s));
}

CircularOrdering CircularOrdering::reversed() const {
    int n = size();
    std::vector<int> s(n);
    s[0] = seq[0];
    for (int i = 1; i < n; ++i) s[i] = seq[n - i];
    return from_seq(std::move(s));
}

static void check_permutation(const Graph& g, const std::vector<int>& seq) {
    int n = g.vertex_count();
    if (static_cast<int>(seq.size()) != n)
        throw std::invalid_argument("ordering size does not match graph");
    std::uint64_t seen = 0;
    for (int v : seq) {
        if (v < 0 || v >= n || ((seen >> v) & 1))
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        seen |= 1ull << v;
    }
}

int max_monotonic_length(const Graph& g, const std::vector<int>& seq) {
    check_permutation(g, seq);
    int n = g.vertex_count();
    int best = 1;
    std::vector<int> dp(n);  // indexed by vertex: path length from start, 0 = unreachable
    for (int a = 0; a + best < n || (a == 0 && n >= 1); ++a) {
        int s = seq[a];
        std::uint64_t reach = 1ull << s;
        dp[s] = 1;
        std::uint64_t close = g.neighbors(s);
        for (int k = a + 1; k < n; ++k) {
            int v = seq[k];
            int len = 0;
            for (std::uint64_t m = g.neighbors(v) & reach; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                len = std::max(len, dp[u]);
            }
            if (len == 0) continue;
            dp[v] = len + 1;
            reach |= 1ull << v;
            if ((close >> v) & 1) best = std::max(best, dp[v]);
        }
        if (best == n) break;
    }
    return best;
}

int max_monotonic_length(const Graph& g, const CircularOrdering& u) {
    return max_monotonic_length(g, u.seq);
}

MonotonicCycleWitness max_monotonic_cycle(const Graph& g, const CircularOrdering& u) {
    check_permutation(g, u.seq);
    int n = g.vertex_count();
    int target = max_monotonic_length(g, u.seq);
    if (target == 1) return {1, {u.seq[0]}};

    // For each candidate start, lenmask[v] holds the achievable lengths of
    // increasing paths from v to a vertex adjacent to the start; exact length
    // queries make the greedy lexicographic reconstruction straightforward.
    std::vector<std::uint64_t> lenmask(n);
    for (int a = 0; a + target <= n; ++a) {
        int s = u.seq[a];
        std::fill(lenmask.begin(), lenmask.end(), 0);
        for (int k = n - 1; k > a; --k) {
            int v = u.seq[k];
            std::uint64_t mask = g.adjacent(v, s) ? 2ull : 0ull;  // bit 1 = length-1 path
            for (int j = k + 1; j < n; ++j) {
                int w = u.seq[j];
                if (g.adjacent(v, w)) mask |= lenmask[w] << 1;
            }
            lenmask[v] = mask;
        }
        bool feasible = false;
        for (int k = a + 1; k < n && !feasible; ++k) {
            int v = u.seq[k];
            feasible = g.adjacent(s, v) && ((lenmask[v] >> (target - 1)) & 1);
        }
        if (!feasible) continue;

        std::vector<int> cycle{s};
        int prev = s;
        int from = a + 1;
        for (int remaining = target - 1; remaining >= 1; --remaining) {
            for (int k = from; k < n; ++k) {
                int v = u.seq[k];
                if (g.adjacent(prev, v) && ((lenmask[v] >> remaining) & 1)) {
                    cycle.push_back(v);
                    prev = v;
                    from = k + 1;
                    break;
                }
            }
        }
        return {target, std::move(cycle)};
    }
    throw std::logic_error("witness reconstruction failed");  // unreachable
}

std::vector<MonotonicCycleWitness> enumerate_monotonic_cycles(const Graph& g,
                                                              const CircularOrdering& u,
                                                              int min_len) {
    check_permutation(g, u.seq);
    int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("enumeration limited to n <= 16");
    std::vector<MonotonicCycleWitness> out;
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        int m = std::popcount(subset);
        if (m < min_len) continue;
        // The vertex sequence is forced: the subset sorted by position.
        std::vector<int> seq_vertices;
        for (int k = 0; k < n; ++k) {
            int v = u.seq[k];
            if ((subset >> v) & 1) seq_vertices.push_back(v);
        }
        bool ok = true;
        if (m >= 2) {
            for (int i = 0; ok && i + 1 < m; ++i)
                ok = g.adjacent(seq_vertices[i], seq_vertices[i + 1]);
            ok = ok && g.adjacent(seq_vertices[m - 1], seq_vertices[0]);
        }
        if (ok) out.push_back({m, std::move(seq_vertices)});
    }
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        auto key = [&](const MonotonicCycleWitness& w) {
            std::vector<int> positions;
            for (int v : w.vertices) positions.push_back(u.position[v]);
            return positions;
        };
        return key(x) < key(y);
    });
    return out;
}

}  // namespace circalt
