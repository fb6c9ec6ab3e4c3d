#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordck/cycles.hpp"
#include "chordck/enumerate.hpp"
#include "chordck/graph.hpp"
#include "chordck/patterns.hpp"

namespace chordck {

enum class HypothesisExtra { None, HasC4, HasChordedC5, DegreeAtLeast };

enum class ConclusionKind {
    ChordedPancyclic,
    CycleOrChordedPancyclic,
    ChordedCycleOfLength,
    PancyclicOrCycle,
};

// Machine form of one statement: hypotheses (order bound, 2-connectivity,
// forbidden set, optional extra clause) and a conclusion.
struct TheoremSpec {
    std::string id;
    int min_order = 0; // 0 = no order clause
    bool requires_two_connected = false;
    std::vector<Pattern> forbidden;
    HypothesisExtra extra = HypothesisExtra::None;
    int extra_k = 0; // DegreeAtLeast: requires some deg >= 2k-1
    ConclusionKind conclusion;
    int conclusion_length = 0; // ChordedCycleOfLength
    std::string summary;
};

const std::vector<TheoremSpec>& theorem_catalog();

// Exact id lookup; "lem_degree" aliases the k=3 entry. Null when unknown.
const TheoremSpec* find_theorem(std::string_view id);

std::vector<std::string> theorem_ids();

struct GraphEvaluation {
    bool order_ok = false;
    bool connectivity_ok = false;
    bool freeness_ok = false;
    std::optional<ForbiddenHit> freeness_violation;
    bool extra_ok = false;
    std::optional<int> degree_witness;          // DegreeAtLeast vertex
    std::optional<CycleWitness> extra_witness;  // HasC4 / HasChordedC5 witness
    bool hypotheses_hold = false;
    bool non_order_hypotheses_hold = false;
    bool conclusion_holds = false;
    bool isomorphic_to_cycle = false;           // the C_n escape, when the conclusion has one
    std::vector<int> missing_lengths;           // lengths breaking the conclusion
    std::optional<CycleWitness> conclusion_witness; // ChordedCycleOfLength, when it holds
    bool is_counterexample = false;
    std::string failed_clause; // "", "order", "two_connected", "freeness", "extra", "conclusion"
};

GraphEvaluation evaluate(const TheoremSpec& spec, const Graph& g);

// Data-parallel hypothesis/conclusion sweep over a batch of graphs. The
// serial kernel is the reference; the OpenMP kernel must match it exactly.
struct SweepResult {
    std::uint64_t scanned = 0;
    std::uint64_t hypothesis_count = 0;
    std::vector<std::size_t> counterexample_indices; // ascending
};
SweepResult sweep_serial(const TheoremSpec& spec, std::span<const Graph> graphs);
SweepResult sweep_parallel(const TheoremSpec& spec, std::span<const Graph> graphs, int threads);

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyOptions {
    int threads = 1;
    double budget_seconds = std::numeric_limits<double>::infinity();
    std::size_t level_cap = 4'000'000;
    bool require_exhaustive = false; // throw incomplete_verification_error when budget bites
};

struct Counterexample {
    int order = 0;
    std::string graph6;
    GraphEvaluation evaluation;
};

struct OrderSummary {
    int order = 0;
    std::uint64_t scanned = 0;
    std::uint64_t hypothesis_count = 0;
    bool exhaustive = true;
};

struct VerificationReport {
    std::string theorem;
    int order_lo = 0;
    int order_hi = 0;
    VerifyMode mode = VerifyMode::Exhaustive;
    std::string fuel; // "builtin" or "graph6"
    std::uint64_t scanned = 0;
    std::uint64_t hypothesis_count = 0;
    std::vector<Counterexample> counterexamples; // sorted by (order, graph6)
    std::vector<OrderSummary> per_order;
    double seconds = 0.0;
};

// Sweep the theorem over the built-in generated class at each order in
// [order_lo, order_hi]. Exhaustive unless the budget or cap truncates
// generation, in which case the report is marked Sampled.
VerificationReport verify(const TheoremSpec& spec, int order_lo, int order_hi,
                          const VerifyOptions& options = {});

// Same sweep over externally supplied graph6 fuel.
VerificationReport verify_stream(const TheoremSpec& spec, std::istream& fuel,
                                 const StreamOptions& stream_options = {},
                                 const VerifyOptions& options = {});

struct SharpnessResult {
    std::vector<Graph> found; // sorted by graph6 string
    bool exhaustive = true;
    std::uint64_t scanned = 0;
    double seconds = 0.0;
};

// Graphs of the given order (below the theorem's bound) satisfying every
// hypothesis except the order clause while violating the conclusion.
SharpnessResult sharpness_search(const TheoremSpec& spec, int order,
                                 const VerifyOptions& options = {});

// Named graphs with frozen labelings.
Graph gallery(std::string_view name);
std::vector<std::string> gallery_names();

struct GalleryCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Machine-checks each fixed gallery graph against its defining properties.
std::vector<GalleryCheck> gallery_self_check();

} // namespace chordck
