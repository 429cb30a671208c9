#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circalt/graph.hpp"
#include "circalt/monotonic.hpp"

namespace circalt {

enum class AltitudeMethod { oracle, branch_and_bound, block_driver };

const char* method_name(AltitudeMethod m);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t orderings = 0;
    double seconds = 0.0;
};

struct BlockValue {
    int block_id;  // index into blocks(g).blocks
    int value;
};

struct AltitudeResult {
    int value = 1;
    CircularOrdering witness;
    AltitudeMethod method = AltitudeMethod::oracle;
    bool exact = true;
    int lower_bound = 1;  // proven lower bound; equals value when exact
    std::vector<BlockValue> per_block;
    std::optional<int> exhausted_block;  // block whose search hit the node budget
    SearchStats stats;
};

struct SearchOptions {
    std::uint64_t node_budget = 0;  // 0 = unlimited
    int threads = 1;
    bool use_reversal_pruning = true;
};

/// Exhaustive minimum over all orderings anchored at vertex 0. n <= 10.
AltitudeResult altitude_oracle(const Graph& g);

/// Branch and bound over anchored ordering prefixes. Requires a connected
/// graph. A prefix whose internal maximum monotonic cycle already reaches the
/// current best survives in every completion, so it is pruned; the search
/// stops early once the clique number is attained. Never returns a wrong
/// value: budget exhaustion is reported explicitly via exact = false.
AltitudeResult altitude_bb(const Graph& g, std::optional<int> initial_upper = {},
                           const SearchOptions& opt = {});

/// Full solver: decompose into components and blocks, solve each block, and
/// take the maximum; assembles a witness ordering for the whole graph.
AltitudeResult altitude(const Graph& g, const SearchOptions& opt = {});

struct CertificateReport {
    bool upper_ok = false;
    std::optional<bool> lower_ok;  // set when the exhaustive re-check ran
    std::string detail;
    bool passed() const { return upper_ok && lower_ok.value_or(true); }
};

/// Re-verifies the witness ordering and, for small graphs, the minimality of
/// the value by full enumeration.
CertificateReport certify(const Graph& g, const AltitudeResult& r, int enumeration_limit = 7);

}  // namespace circalt
