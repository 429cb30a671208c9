#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "circalt/graph.hpp"

namespace circalt {

struct PropertyFailure {
    std::vector<std::string> inputs;  // graph6 of the graphs involved
    std::string expected;
    std::string observed;
};

struct PropertyReport {
    std::string property;
    std::uint64_t instances = 0;
    std::uint64_t skipped = 0;
    std::vector<PropertyFailure> failures;
    std::uint64_t seed = 0;
    double seconds = 0.0;
    bool passed() const { return failures.empty(); }
};

std::string report_json(const PropertyReport& r);
std::string report_text(const PropertyReport& r);

/// All graphs on exactly n vertices up to isomorphism, generated by
/// extend-and-deduplicate from the (n-1)-vertex catalog. n <= 7.
const std::vector<Graph>& graph_catalog(int n);
std::vector<Graph> connected_catalog(int n);

/// Deterministic Erdos-Renyi G(n, p) stream. The generator is mt19937_64
/// seeded directly; an edge is present iff the next draw, mapped to [0, 1)
/// by (x >> 11) * 2^-53, is below p. Identical across platforms.
Graph random_graph(int n, double p, std::mt19937_64& rng);
std::vector<Graph> random_graphs(int n, double p, int count, std::uint64_t seed);

/// Connected random graphs glued at a shared vertex, which is forced to be a
/// cut-vertex. Each result has between 3 and max_n vertices.
std::vector<Graph> random_cut_vertex_graphs(int max_n, int count, std::uint64_t seed);

/// Pairs (G, H) where H is G plus a duplicate of one vertex, hence
/// homomorphically equivalent to G. |V(H)| <= 6.
std::vector<std::pair<Graph, Graph>> hom_equivalent_pairs(int count, std::uint64_t seed);

/// Random pairs filtered so that a homomorphism G -> H exists.
std::vector<std::pair<Graph, Graph>> hom_pairs(int count, std::uint64_t seed);

// Theorem checks. Each compares against the exhaustive oracle so exactly one
// implementation is pinned as ground truth per check.
PropertyReport check_block_theorem(const std::vector<Graph>& graphs);
PropertyReport check_product_theorem(const std::vector<std::pair<Graph, Graph>>& pairs);
PropertyReport check_bounds(const std::vector<Graph>& graphs);
PropertyReport check_hom_invariance(const std::vector<std::pair<Graph, Graph>>& pairs);

}  // namespace circalt
