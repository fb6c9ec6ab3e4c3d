#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <vector>

#include "chordck/canonical.hpp"
#include "chordck/graph.hpp"
#include "chordck/patterns.hpp"

namespace chordck {

enum class Connectivity { Any, Connected, TwoConnected };

// A hereditary (forbidden-induced-subgraph) graph class at one target order.
// The connectivity filter applies at the target order only; intermediate
// levels are connected for Connected/TwoConnected targets and unrestricted
// for Any.
struct ClassSpec {
    int target_order = 0;
    std::vector<Pattern> forbidden;
    Connectivity connectivity = Connectivity::Connected;
    std::optional<int> max_degree;
};

struct LevelStats {
    int order = 0;
    std::uint64_t kept = 0;            // distinct representatives stored
    std::uint64_t children = 0;        // candidate extensions examined
    std::uint64_t pruned_degree = 0;   // rejected by the max-degree bound
    std::uint64_t pruned_pattern = 0;  // rejected by a forbidden pattern
    std::uint64_t duplicates = 0;      // accepted but canonically already present
    bool truncated = false;            // budget or cap cut this level short
};

struct GenStats {
    std::vector<LevelStats> levels;
    std::uint64_t emitted = 0;
    double seconds = 0.0;
    bool complete = true;

    const LevelStats* level(int order) const {
        for (const auto& l : levels)
            if (l.order == order) return &l;
        return nullptr;
    }
};

struct GenOptions {
    int threads = 1; // 1 = serial reference kernel, >1 = OpenMP kernel
    double budget_seconds = std::numeric_limits<double>::infinity();
    std::size_t level_cap = 4'000'000; // per-level representative cap
};

struct GenResult {
    std::vector<Graph> graphs; // sorted by canonical code
    GenStats stats;
};

// Isomorph-free exhaustive generation by vertex augmentation. Emits exactly
// one representative per isomorphism class satisfying the spec, in canonical
// code order. Refuses unrestricted generation above order 9.
GenResult generate_class(const ClassSpec& spec, const GenOptions& options = {});

// One augmentation step, exposed for tests and the benchmark: all accepted
// children of `parents` at order parents[i].order()+1. Serial reference and
// OpenMP kernels must produce identical results.
struct LevelResult {
    std::vector<std::pair<CanonicalCode, Graph>> kept; // sorted by code
    LevelStats stats;
};
LevelResult expand_level_serial(const std::vector<Graph>& parents, const ClassSpec& spec,
                                const GenOptions& options, double deadline);
LevelResult expand_level_parallel(const std::vector<Graph>& parents, const ClassSpec& spec,
                                  const GenOptions& options, double deadline);

struct StreamOptions {
    bool skip_bad = false;
};

struct StreamDiagnostic {
    std::size_t line = 0;
    std::string message;
};

// Decode a stream of graph6 lines. Malformed lines are fatal unless skip_bad
// is set, in which case they are reported through `diagnostics` and skipped.
std::vector<Graph> stream_graph6(std::istream& in, const StreamOptions& options = {},
                                 std::vector<StreamDiagnostic>* diagnostics = nullptr);

// Monotone clock in seconds, shared by generation and verification budgets.
double monotonic_seconds();

} // namespace chordck
