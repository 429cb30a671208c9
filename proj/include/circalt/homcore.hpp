#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circalt/graph.hpp"

namespace circalt {

/// Exact rational, always stored in lowest terms with q > 0.
struct Rational {
    long long p = 0;
    long long q = 1;

    Rational() = default;
    Rational(long long num, long long den);

    bool operator==(const Rational& o) const { return p == o.p && q == o.q; }
    bool operator<(const Rational& o) const { return p * o.q < o.p * q; }
    bool operator<=(const Rational& o) const { return p * o.q <= o.p * q; }

    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

/// Exact clique number by branch and bound over bitset adjacency with a
/// greedy-coloring upper bound.
int clique_number(const Graph& g);

/// map[x] is the image of vertex x of g in h.
using Homomorphism = std::vector<int>;

bool is_homomorphism(const Graph& g, const Graph& h, const Homomorphism& f);

/// Complete backtracking search with forward checking; nullopt means no
/// homomorphism from g to h exists.
std::optional<Homomorphism> hom_exists(const Graph& g, const Graph& h);

struct CoreResult {
    Graph graph;
    std::vector<int> vertices;  // core vertex -> vertex of the input graph
};

/// Retract-to-fixpoint core computation: repeatedly find an endomorphism
/// with a proper image and restrict, until only bijective endomorphisms
/// remain.
CoreResult core_of(const Graph& g);

/// Circular clique K_{p/q}: vertices 0..p-1, i ~ j iff q <= |i-j| <= p-q.
Graph circular_clique(int p, int q);

struct CircularChromaticResult {
    Rational value;
    int p = 0;
    int q = 1;
    Homomorphism witness;
};

/// Minimum p/q with p <= n such that g maps into K_{p/q}; requires an edge.
CircularChromaticResult circular_chromatic(const Graph& g);

/// Brute-force isomorphism test with degree-sequence pruning. Desk scale.
bool isomorphic(const Graph& g, const Graph& h);

}  // namespace circalt
