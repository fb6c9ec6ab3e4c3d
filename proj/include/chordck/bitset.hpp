#pragma once

#include <bit>
#include <cstdint>

namespace chordck {

// One machine word of vertex bits. Everything at desk scale fits in 64
// vertices, and a single word keeps neighborhood intersection constant-time.
using VertexSet = std::uint64_t;

inline constexpr int kCapacity = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr bool empty(VertexSet s) { return s == 0; }

// Lowest-numbered vertex of a nonempty set.
constexpr int first_vertex(VertexSet s) { return std::countr_zero(s); }

// All vertices strictly below v.
constexpr VertexSet below(int v) { return vbit(v) - 1; }

// The full vertex set of an order-n graph.
constexpr VertexSet full_set(int n) {
    return n >= kCapacity ? ~VertexSet{0} : vbit(n) - 1;
}

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

} // namespace chordck
