#pragma once

#include <compare>
#include <string>

#include "chordck/graph.hpp"

namespace chordck {

// Relabeling-invariant identifier: equal codes certify isomorphism for every
// order the Graph type can hold. Stable across runs and platforms.
struct CanonicalCode {
    std::string bytes; // [order byte][packed upper triangle of the canonical adjacency matrix]

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_form(const Graph& g);

// Vertex ordering realizing canonical_form: position i holds the original
// vertex placed at canonical index i.
std::vector<int> canonical_ordering(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

} // namespace chordck
