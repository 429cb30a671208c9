#include "circalt/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "circalt/altitude.hpp"
#include "circalt/homcore.hpp"
#include "circalt/monotonic.hpp"

namespace circalt {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void finish(PropertyReport& r, Clock::time_point start) {
    std::sort(r.failures.begin(), r.failures.end(),
              [](const PropertyFailure& a, const PropertyFailure& b) {
                  return a.inputs < b.inputs;
              });
    r.seconds = elapsed_seconds(start);
}

}  // namespace

std::string report_json(const PropertyReport& r) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["property"] = r.property;
    j["instances"] = r.instances;
    j["skipped"] = r.skipped;
    j["seed"] = r.seed;
    j["passed"] = r.passed();
    j["seconds"] = r.seconds;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : r.failures)
        j["failures"].push_back({{"inputs", f.inputs},
                                 {"expected", f.expected},
                                 {"observed", f.observed}});
    return j.dump();
}

std::string report_text(const PropertyReport& r) {
    std::ostringstream out;
    out << (r.passed() ? "PASS" : "FAIL") << "  " << r.property
        << "  instances=" << r.instances;
    if (r.skipped) out << " skipped=" << r.skipped;
    out << " failures=" << r.failures.size() << " seed=" << r.seed;
    for (const auto& f : r.failures) {
        out << "\n  input:";
        for (const auto& in : f.inputs) out << " " << in;
        out << "  expected " << f.expected << ", observed " << f.observed;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// catalogs

namespace {

// Minimum edge code over all vertex permutations; usable as a canonical key
// for n <= 7.
std::uint64_t canonical_code(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t code = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                code <<= 1;
                code |= g.adjacent(perm[u], perm[v]) ? 1 : 0;
            }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph extend_with_neighbors(const Graph& g, std::uint32_t neighbor_mask) {
    int n = g.vertex_count();
    auto edges = g.edges();
    for (int v = 0; v < n; ++v)
        if ((neighbor_mask >> v) & 1) edges.emplace_back(v, n);
    return Graph(n + 1, edges);
}

}  // namespace

const std::vector<Graph>& graph_catalog(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("catalog supported for 1 <= n <= 7");
    static std::map<int, std::vector<Graph>> cache;
    static std::recursive_mutex mutex;  // the n-1 catalog is built recursively
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    std::vector<Graph> result;
    if (n == 1) {
        result.emplace_back(1);
    } else {
        const auto& smaller = graph_catalog(n - 1);
        std::map<std::uint64_t, Graph> by_code;
        for (const auto& base : smaller)
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                Graph candidate = extend_with_neighbors(base, mask);
                by_code.try_emplace(canonical_code(candidate), candidate);
            }
        for (auto& [code, g] : by_code) result.push_back(std::move(g));
    }
    // Deterministic order: by edge count, then graph6 string.
    std::sort(result.begin(), result.end(), [](const Graph& a, const Graph& b) {
        int ea = a.edge_count(), eb = b.edge_count();
        if (ea != eb) return ea < eb;
        return encode_graph6(a) < encode_graph6(b);
    });
    return cache.emplace(n, std::move(result)).first->second;
}

std::vector<Graph> connected_catalog(int n) {
    std::vector<Graph> out;
    for (const auto& g : graph_catalog(n))
        if (components(g).size() == 1) out.push_back(g);
    return out;
}

// ---------------------------------------------------------------------------
// random streams

namespace {

double unit_draw(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

int draw_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Graph ensure_connected(const Graph& g, std::mt19937_64& rng) {
    auto comps = components(g);
    if (comps.size() == 1) return g;
    auto edges = g.edges();
    for (std::size_t i = 1; i < comps.size(); ++i) {
        std::vector<int> a, b;
        for (std::uint64_t m = comps[0]; m;) { a.push_back(std::countr_zero(m)); m &= m - 1; }
        for (std::uint64_t m = comps[i]; m;) { b.push_back(std::countr_zero(m)); m &= m - 1; }
        edges.emplace_back(a[draw_int(rng, 0, static_cast<int>(a.size()) - 1)],
                           b[draw_int(rng, 0, static_cast<int>(b.size()) - 1)]);
    }
    return ensure_connected(Graph(g.vertex_count(), edges), rng);
}

}  // namespace

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_draw(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<Graph> random_graphs(int n, double p, int count, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability out of [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(random_graph(n, p, rng));
    return out;
}

std::vector<Graph> random_cut_vertex_graphs(int max_n, int count, std::uint64_t seed) {
    if (max_n < 3) throw std::invalid_argument("need at least 3 vertices for a cut-vertex");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        int total = draw_int(rng, 3, max_n);
        int n1 = draw_int(rng, 2, total - 1);
        int n2 = total + 1 - n1;
        Graph a = ensure_connected(random_graph(n1, 0.5, rng), rng);
        Graph b = ensure_connected(random_graph(n2, 0.5, rng), rng);
        // Glue b's vertex 0 onto a's last vertex.
        auto edges = a.edges();
        auto remap = [&](int v) { return v == 0 ? n1 - 1 : n1 + v - 1; };
        for (auto [u, v] : b.edges()) edges.emplace_back(remap(u), remap(v));
        out.emplace_back(n1 + n2 - 1, edges);
    }
    return out;
}

std::vector<std::pair<Graph, Graph>> hom_equivalent_pairs(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Graph, Graph>> out;
    while (static_cast<int>(out.size()) < count) {
        int n = draw_int(rng, 2, 5);
        Graph g = random_graph(n, 0.5, rng);
        int v = draw_int(rng, 0, n - 1);
        // Duplicate v: the clone gets exactly v's neighborhood and is not
        // adjacent to v, so folding it back onto v is a homomorphism.
        auto edges = g.edges();
        for (std::uint64_t m = g.neighbors(v); m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            edges.emplace_back(u, n);
        }
        out.emplace_back(g, Graph(n + 1, edges));
    }
    return out;
}

std::vector<std::pair<Graph, Graph>> hom_pairs(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Graph, Graph>> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        Graph g = random_graph(draw_int(rng, 1, 6), 0.4, rng);
        Graph h = ++attempts > 200 * count ? complete(6)
                                           : random_graph(draw_int(rng, 1, 6), 0.5, rng);
        if (hom_exists(g, h)) out.emplace_back(std::move(g), std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------------------
// theorem checks

PropertyReport check_block_theorem(const std::vector<Graph>& graphs) {
    auto start = Clock::now();
    PropertyReport report;
    report.property = "block_theorem";
    for (const auto& g : graphs) {
        ++report.instances;
        int whole = altitude_oracle(g).value;
        int block_max = 1;
        for (std::uint64_t mask : blocks(g).blocks)
            block_max = std::max(block_max,
                                 altitude_oracle(induced_subgraph(g, mask).graph).value);
        if (whole != block_max)
            report.failures.push_back({{encode_graph6(g)},
                                       "altitude == max over blocks (" +
                                           std::to_string(block_max) + ")",
                                       std::to_string(whole)});
    }
    finish(report, start);
    return report;
}

PropertyReport check_product_theorem(const std::vector<std::pair<Graph, Graph>>& pairs) {
    auto start = Clock::now();
    PropertyReport report;
    report.property = "product_theorem";
    for (const auto& [g, h] : pairs) {
        ++report.instances;
        Graph product = cartesian_product(g, h);
        auto rg = altitude_oracle(g);
        auto rh = altitude_oracle(h);
        int expected = std::max(rg.value, rh.value);
        int observed = altitude_oracle(product).value;
        std::vector<std::string> inputs{encode_graph6(g), encode_graph6(h)};
        if (observed != expected)
            report.failures.push_back(
                {inputs, "altitude(product) == " + std::to_string(expected),
                 std::to_string(observed)});
        // The lexicographic ordering built from the factor witnesses must not
        // beat the factor maximum.
        std::vector<int> seq;
        for (int gi : rg.witness.seq)
            for (int hj : rh.witness.seq)
                seq.push_back(product_index(gi, hj, h.vertex_count()));
        int lex = max_monotonic_length(product, seq);
        if (lex > expected)
            report.failures.push_back(
                {inputs, "lexicographic ordering <= " + std::to_string(expected),
                 std::to_string(lex)});
    }
    finish(report, start);
    return report;
}

PropertyReport check_bounds(const std::vector<Graph>& graphs) {
    auto start = Clock::now();
    PropertyReport report;
    report.property = "bounds_sandwich";
    for (const auto& g : graphs) {
        ++report.instances;
        std::string g6 = encode_graph6(g);
        int alt = altitude_oracle(g).value;
        int omega = clique_number(g);
        if (omega > alt)
            report.failures.push_back({{g6}, "omega <= altitude",
                                       std::to_string(omega) + " > " + std::to_string(alt)});
        if (g.has_edges()) {
            auto chi = circular_chromatic(g).value;
            if (!(Rational(alt, 1) <= chi))
                report.failures.push_back({{g6}, "altitude <= chi_c = " + chi.str(),
                                           std::to_string(alt)});
        }
        if (alt >= 3) {
            auto gir = girth(g);
            if (!gir || alt < *gir)
                report.failures.push_back(
                    {{g6}, "altitude >= girth when altitude >= 3",
                     std::to_string(alt) + " vs girth " +
                         (gir ? std::to_string(*gir) : std::string("inf"))});
        }
    }
    finish(report, start);
    return report;
}

PropertyReport check_hom_invariance(const std::vector<std::pair<Graph, Graph>>& pairs) {
    auto start = Clock::now();
    PropertyReport report;
    report.property = "hom_invariance";
    for (const auto& [g, h] : pairs) {
        std::vector<std::string> inputs{encode_graph6(g), encode_graph6(h)};
        auto forward = hom_exists(g, h);
        if (!forward) {
            ++report.skipped;  // implication vacuous for this pair
        } else {
            ++report.instances;
            int ag = altitude_oracle(g).value;
            int ah = altitude_oracle(h).value;
            if (ag > ah)
                report.failures.push_back({inputs, "hom implies altitude(G) <= altitude(H)",
                                           std::to_string(ag) + " > " + std::to_string(ah)});
            if (hom_exists(h, g) && ag != ah)
                report.failures.push_back({inputs, "hom-equivalent graphs have equal altitudes",
                                           std::to_string(ag) + " != " + std::to_string(ah)});
        }
        for (const Graph* side : {&g, &h}) {
            ++report.instances;
            int whole = altitude_oracle(*side).value;
            int core = altitude_oracle(core_of(*side).graph).value;
            if (whole != core)
                report.failures.push_back({{encode_graph6(*side)},
                                           "altitude(core) == altitude",
                                           std::to_string(core) + " != " +
                                               std::to_string(whole)});
        }
    }
    finish(report, start);
    return report;
}

}  // namespace circalt
