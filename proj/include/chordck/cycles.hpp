#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chordck/graph.hpp"

namespace chordck {

// An m-cycle as an ordered vertex sequence plus the complete list of its
// chords (edges between non-consecutive cycle vertices), each chord stored
// with smaller endpoint first, list sorted.
struct CycleWitness {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> chords;
};

// Least m-cycle under the canonical rooted orientation: the sequence starts at
// the smallest cycle vertex and its second vertex is smaller than its last.
std::optional<CycleWitness> find_cycle(const Graph& g, int m);

// First m-cycle in canonical order carrying at least one chord. Empty means
// no m-cycle exists or every m-cycle is chordless.
std::optional<CycleWitness> find_chorded_cycle(const Graph& g, int m);

enum class CycleStatus { None, ChordlessOnly, Chorded };

struct LengthReport {
    int length;
    CycleStatus status;
    std::optional<CycleWitness> witness;
};

struct PancyclicityReport {
    int order;
    std::vector<LengthReport> lengths;        // m = 3..order
    bool pancyclic;                           // some cycle for every m in 3..order
    bool chorded_pancyclic;                   // chorded cycle for every m in 4..order
    std::vector<int> missing_cycle_lengths;   // m in 3..order with no cycle
    std::vector<int> missing_chorded_lengths; // m in 4..order with no chorded cycle
};

PancyclicityReport pancyclicity_report(const Graph& g);

// Path a0 a1 ... a_{k+1} whose k internal vertices avoid the host set and
// whose distinct endpoints lie in it.
struct KTab {
    VertexSet host;
    std::vector<int> path;
    int k;
};

// All k-tabs on the host set up to reversal (oriented so a0 < a_{k+1}),
// sorted lexicographically by vertex sequence.
std::vector<KTab> k_tabs(const Graph& g, VertexSet host, int k);

// A tab of least k; among those, one whose endpoints are adjacent when such a
// tab exists, then least lexicographic. Empty when no tab reaches the host.
std::optional<KTab> minimal_k_tab(const Graph& g, VertexSet host);

} // namespace chordck
