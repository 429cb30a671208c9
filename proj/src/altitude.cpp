#include "circalt/altitude.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "circalt/homcore.hpp"

namespace circalt {

const char* method_name(AltitudeMethod m) {
    switch (m) {
        case AltitudeMethod::oracle: return "oracle";
        case AltitudeMethod::branch_and_bound: return "branch_and_bound";
        case AltitudeMethod::block_driver: return "block_driver";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

// ---------------------------------------------------------------------------
// oracle

AltitudeResult altitude_oracle(const Graph& g) {
    int n = g.vertex_count();
    if (n > 10)
        throw std::invalid_argument("altitude oracle enumerates (n-1)! orderings; n <= 10 only");
    auto start = Clock::now();
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    AltitudeResult r;
    r.method = AltitudeMethod::oracle;
    int best = n + 1;
    std::vector<int> best_seq;
    do {
        ++r.stats.orderings;
        int val = max_monotonic_length(g, seq);
        if (val < best) {
            best = val;
            best_seq = seq;
        }
    } while (best > 1 && std::next_permutation(seq.begin() + 1, seq.end()));
    r.value = best;
    r.lower_bound = best;
    r.witness = CircularOrdering::from_seq(best_seq);
    r.stats.seconds = elapsed_seconds(start);
    return r;
}

// ---------------------------------------------------------------------------
// branch and bound

namespace {

// Longest monotonic cycle forced to end at the last placed vertex; together
// with the running maximum over earlier prefixes this equals the kernel value
// on the prefix, since every cycle is counted when its final vertex arrives.
int cycle_through_last(const Graph& g, const std::vector<int>& placed) {
    int k = static_cast<int>(placed.size());
    int v = placed.back();
    int best = 1;
    std::vector<int> len(k - 1, 0);  // path ending at placed[j], start adjacent to v
    for (int j = 0; j + 1 < k; ++j) {
        int u = placed[j];
        int l = g.adjacent(u, v) ? 1 : 0;
        for (int i = 0; i < j; ++i)
            if (len[i] > 0 && g.adjacent(placed[i], u)) l = std::max(l, len[i] + 1);
        len[j] = l;
        if (l > 0 && g.adjacent(u, v)) best = std::max(best, l + 1);
    }
    return best;
}

struct SharedSearch {
    const Graph& g;
    int n;
    std::vector<int> branch_order;
    int lower;
    int prune_cap;  // exclusive cap from a caller-supplied upper bound
    bool reversal;
    bool limited;
    std::atomic<long long> budget{0};
    std::atomic<int> best;
    std::vector<int> best_seq;
    std::mutex best_mutex;
    std::atomic<bool> exhausted{false};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> orderings{0};

    void offer(int value, const std::vector<int>& seq) {
        std::lock_guard lock(best_mutex);
        if (value < best.load(std::memory_order_relaxed)) {
            best.store(value, std::memory_order_relaxed);
            best_seq = seq;
        }
    }

    void dfs(std::vector<int>& placed, std::uint64_t used, int bound) {
        if (exhausted.load(std::memory_order_relaxed)) return;
        if (best.load(std::memory_order_relaxed) <= lower) return;
        if (limited && budget.fetch_sub(1, std::memory_order_relaxed) <= 0) {
            exhausted.store(true, std::memory_order_relaxed);
            return;
        }
        nodes.fetch_add(1, std::memory_order_relaxed);
        int k = static_cast<int>(placed.size());
        if (k == n) {
            orderings.fetch_add(1, std::memory_order_relaxed);
            offer(bound, placed);
            return;
        }
        for (int v : branch_order) {
            if ((used >> v) & 1) continue;
            if (reversal && n >= 3 && k == n - 1 && v < placed[1]) continue;
            placed.push_back(v);
            int nb = std::max(bound, cycle_through_last(g, placed));
            if (nb < std::min(best.load(std::memory_order_relaxed), prune_cap))
                dfs(placed, used | (1ull << v), nb);
            placed.pop_back();
        }
    }
};

}  // namespace

AltitudeResult altitude_bb(const Graph& g, std::optional<int> initial_upper,
                           const SearchOptions& opt) {
    int n = g.vertex_count();
    auto start = Clock::now();
    AltitudeResult r;
    r.method = AltitudeMethod::branch_and_bound;
    if (n == 1) {
        r.value = r.lower_bound = 1;
        r.witness = CircularOrdering::identity(1);
        return r;
    }

    SharedSearch search{g, n};
    search.branch_order.resize(n - 1);
    std::iota(search.branch_order.begin(), search.branch_order.end(), 1);
    std::stable_sort(search.branch_order.begin(), search.branch_order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    search.lower = clique_number(g);
    search.prune_cap =
        initial_upper ? *initial_upper + 1 : std::numeric_limits<int>::max();
    search.reversal = opt.use_reversal_pruning;
    search.limited = opt.node_budget > 0;
    search.budget.store(static_cast<long long>(opt.node_budget));
    search.best.store(n + 1);

    // Two cheap starting orderings give the initial upper bound and witness.
    {
        std::vector<int> ident(n);
        std::iota(ident.begin(), ident.end(), 0);
        search.offer(max_monotonic_length(g, ident), ident);
        std::vector<int> by_degree{0};
        by_degree.insert(by_degree.end(), search.branch_order.begin(),
                         search.branch_order.end());
        search.offer(max_monotonic_length(g, by_degree), by_degree);
    }

    if (search.best.load() > search.lower) {
        int workers = std::max(1, opt.threads);
        if (workers == 1) {
            std::vector<int> placed{0};
            search.dfs(placed, 1ull, 1);
        } else {
            std::atomic<std::size_t> next{0};
            auto run = [&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= search.branch_order.size()) return;
                    if (search.exhausted.load() || search.best.load() <= search.lower)
                        return;
                    int v = search.branch_order[i];
                    std::vector<int> placed{0, v};
                    int bound = std::max(1, cycle_through_last(g, placed));
                    if (bound < std::min(search.best.load(), search.prune_cap))
                        search.dfs(placed, 1ull | (1ull << v), bound);
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t) pool.emplace_back(run);
            for (auto& t : pool) t.join();
        }
    }

    r.value = search.best.load();
    r.witness = CircularOrdering::from_seq(search.best_seq);
    r.exact = !search.exhausted.load();
    r.lower_bound = r.exact ? r.value : search.lower;
    r.stats.nodes = search.nodes.load();
    r.stats.orderings = search.orderings.load();
    r.stats.seconds = elapsed_seconds(start);
    return r;
}

// ---------------------------------------------------------------------------
// block driver

namespace {

struct SolvedBlock {
    std::uint64_t mask;  // original vertex ids
    int value;
    int lower;
    bool exact;
};

struct BlockDriver {
    const Graph& g;
    const SearchOptions& opt;
    std::vector<SolvedBlock> solved;
    SearchStats stats;

    std::vector<int> rotate_to_front(std::vector<int> seq, int first) {
        auto it = std::find(seq.begin(), seq.end(), first);
        std::rotate(seq.begin(), it, seq.end());
        return seq;
    }

    // Value and witness ordering (original ids) of a connected vertex set.
    std::pair<int, std::vector<int>> solve_connected(std::uint64_t mask,
                                                     std::optional<int> first) {
        auto ind = induced_subgraph(g, mask);
        int k = ind.graph.vertex_count();
        if (k == 1) {
            solved.push_back({mask, 1, 1, true});
            return {1, {ind.vertices[0]}};
        }
        auto decomposition = blocks(ind.graph);
        if (decomposition.cut_vertices == 0) {
            // A single block: K2 directly, anything larger via search.
            int value;
            std::vector<int> seq;
            if (k == 2) {
                value = 2;
                seq = {ind.vertices[0], ind.vertices[1]};
                solved.push_back({mask, 2, 2, true});
            } else {
                auto r = altitude_bb(ind.graph, {}, opt);
                value = r.value;
                for (int v : r.witness.seq) seq.push_back(ind.vertices[v]);
                solved.push_back({mask, r.value, r.lower_bound, r.exact});
                stats.nodes += r.stats.nodes;
                stats.orderings += r.stats.orderings;
            }
            if (first) seq = rotate_to_front(std::move(seq), *first);
            return {value, std::move(seq)};
        }

        // Split at a cut-vertex; each side keeps the cut-vertex in front so
        // the pieces can share it in the assembled ordering.
        int x = -1;
        if (first) {
            int fi = static_cast<int>(std::find(ind.vertices.begin(), ind.vertices.end(),
                                                *first) -
                                      ind.vertices.begin());
            if ((decomposition.cut_vertices >> fi) & 1) x = *first;
        }
        if (x < 0)
            x = ind.vertices[std::countr_zero(decomposition.cut_vertices)];

        std::uint64_t rest = mask & ~(1ull << x);
        auto sub = induced_subgraph(g, rest);
        int value = 1;
        std::vector<int> seq{x};
        for (std::uint64_t comp : components(sub.graph)) {
            std::uint64_t cmask = 0;
            for (std::uint64_t m = comp; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                cmask |= 1ull << sub.vertices[v];
            }
            auto [cv, cseq] = solve_connected(cmask | (1ull << x), x);
            value = std::max(value, cv);
            seq.insert(seq.end(), cseq.begin() + 1, cseq.end());
        }
        if (first && *first != x) seq = rotate_to_front(std::move(seq), *first);
        return {value, std::move(seq)};
    }
};

}  // namespace

AltitudeResult altitude(const Graph& g, const SearchOptions& opt) {
    auto start = Clock::now();
    BlockDriver driver{g, opt};
    int value = 1;
    std::vector<int> seq;
    for (std::uint64_t comp : components(g)) {
        auto [cv, cseq] = driver.solve_connected(comp, std::nullopt);
        value = std::max(value, cv);
        seq.insert(seq.end(), cseq.begin(), cseq.end());
    }

    AltitudeResult r;
    r.method = AltitudeMethod::block_driver;
    r.value = value;
    r.witness = CircularOrdering::from_seq(std::move(seq));
    r.stats = driver.stats;
    r.stats.seconds = elapsed_seconds(start);

    auto decomposition = blocks(g);
    int lower = 1;
    for (const auto& sb : driver.solved) {
        int id = -1;
        for (std::size_t b = 0; b < decomposition.blocks.size(); ++b)
            if (decomposition.blocks[b] == sb.mask) {
                id = static_cast<int>(b);
                break;
            }
        r.per_block.push_back({id, sb.value});
        lower = std::max(lower, sb.exact ? sb.value : sb.lower);
        if (!sb.exact) {
            r.exact = false;
            r.exhausted_block = id;
        }
    }
    std::sort(r.per_block.begin(), r.per_block.end(),
              [](const BlockValue& a, const BlockValue& b) { return a.block_id < b.block_id; });
    r.lower_bound = r.exact ? r.value : lower;
    return r;
}

// ---------------------------------------------------------------------------
// certification

CertificateReport certify(const Graph& g, const AltitudeResult& r, int enumeration_limit) {
    CertificateReport report;
    try {
        if (!r.exact) {
            report.detail = "inexact result: witness certifies an upper bound only";
            report.upper_ok = max_monotonic_length(g, r.witness.seq) <= r.value;
            return report;
        }
        report.upper_ok = max_monotonic_length(g, r.witness.seq) == r.value;
        if (!report.upper_ok) report.detail = "witness ordering does not evaluate to the value";
    } catch (const std::exception& e) {
        report.upper_ok = false;
        report.detail = e.what();
        return report;
    }
    if (r.exact && g.vertex_count() <= enumeration_limit) {
        int n = g.vertex_count();
        std::vector<int> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        int best = n + 1;
        do {
            best = std::min(best, max_monotonic_length(g, seq));
        } while (std::next_permutation(seq.begin() + 1, seq.end()));
        report.lower_ok = best == r.value;
        if (!*report.lower_ok)
            report.detail = "enumeration minimum " + std::to_string(best) +
                            " differs from claimed " + std::to_string(r.value);
    }
    return report;
}

}  // namespace circalt
