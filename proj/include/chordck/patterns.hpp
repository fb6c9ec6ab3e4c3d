#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chordck/graph.hpp"

namespace chordck {

enum class PatternKind { Claw, Path, Z };

// One of the named forbidden subgraphs together with its explicit realization.
//   Claw     K_{1,3}: vertex 0 adjacent to 1, 2, 3, no other edges.
//   Path(t)  P_t: vertices 0..t-1 in path order.
//   Z(i)     triangle {0,1,2} plus a pendant path of i vertices hung off
//            vertex 2 (so Z(1) has 4 vertices, Z(2) has 5).
struct Pattern {
    PatternKind kind;
    int parameter; // t for Path, i for Z, unused for Claw
    Graph graph;
    std::string name; // "claw", "p4", "z2", ...

    int order() const { return graph.order(); }
};

Pattern make_pattern(PatternKind kind, int parameter = 0);

// Parses "claw", "pN", "zN" (case-insensitive). Returns nullopt on anything else.
std::optional<Pattern> pattern_from_name(std::string_view name);

// Map from pattern vertex index to host vertex.
using Witness = std::vector<int>;

// Least (by mapped tuple) induced embedding of p into g, if any.
std::optional<Witness> contains_induced(const Graph& g, const Pattern& p);

struct ForbiddenHit {
    std::size_t pattern_index;
    Witness witness;
};

// First pattern (in list order) that embeds, with its least witness.
std::optional<ForbiddenHit> first_forbidden_witness(const Graph& g,
                                                    std::span<const Pattern> forbidden);

// Hamiltonian path, or nullopt. Exhaustive DFS with degree-sorted branching.
std::optional<std::vector<int>> is_traceable(const Graph& g);

enum class NeighborhoodKind { TraceableConnected, TwoDisjointCliques, Other };

// Classification of G[N(x)]. Exactly one witness field is meaningful:
// `path` for TraceableConnected, the clique pair for TwoDisjointCliques,
// `violating_triple` (three pairwise nonadjacent neighbors) for Other.
// A vertex of degree zero classifies as two empty cliques.
struct NeighborhoodShape {
    NeighborhoodKind kind;
    std::vector<int> path;
    VertexSet clique_a = 0;
    VertexSet clique_b = 0;
    std::array<int, 3> violating_triple{-1, -1, -1};
};

NeighborhoodShape neighborhood_structure(const Graph& g, int x);

} // namespace chordck
