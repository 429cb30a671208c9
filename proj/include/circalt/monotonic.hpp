#pragma once

#include <vector>

#include "circalt/graph.hpp"

namespace circalt {

/// A linear ordering of the vertices, read circularly. seq[k] is the vertex
/// at position k; position is the inverse permutation.
struct CircularOrdering {
    std::vector<int> seq;
    std::vector<int> position;

    static CircularOrdering from_seq(std::vector<int> s);
    static CircularOrdering identity(int n);

    int size() const { return static_cast<int>(seq.size()); }

    /// Ordering rotated so that position k becomes first.
    CircularOrdering rotated(int k) const;

    /// Circular reversal keeping the first vertex in place.
    CircularOrdering reversed() const;
};

/// A monotonic cycle: vertex positions strictly increase along the sequence,
/// consecutive vertices are adjacent, and the last closes back to the first.
/// Length 1 is a bare vertex; length 2 a single edge.
struct MonotonicCycleWitness {
    int length = 1;
    std::vector<int> vertices;
};

/// Maximum length of a monotonic cycle for the given ordering.
int max_monotonic_length(const Graph& g, const std::vector<int>& seq);
int max_monotonic_length(const Graph& g, const CircularOrdering& u);

/// Maximum-length witness with the lexicographically smallest position
/// sequence among ties.
MonotonicCycleWitness max_monotonic_cycle(const Graph& g, const CircularOrdering& u);

/// All monotonic cycles of length >= min_len by subset enumeration (a cycle
/// is determined by its vertex set, sorted by position). n <= 16 only.
std::vector<MonotonicCycleWitness> enumerate_monotonic_cycles(const Graph& g,
                                                              const CircularOrdering& u,
                                                              int min_len);

}  // namespace circalt
