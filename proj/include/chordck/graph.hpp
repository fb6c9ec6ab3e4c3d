#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordck/bitset.hpp"
#include "chordck/errors.hpp"

namespace chordck {

// Simple undirected graph on at most kCapacity vertices, adjacency kept as one
// bit set per vertex. Treat instances as immutable once built; all free
// functions below are pure.
class Graph {
public:
    Graph() = default;

    explicit Graph(int order) {
        if (order < 0 || order > kCapacity)
            throw capacity_error("graph order " + std::to_string(order) +
                                 " outside [0, " + std::to_string(kCapacity) + "]");
        n_ = order;
        adj_.assign(static_cast<std::size_t>(order), 0);
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return contains(adj_[static_cast<std::size_t>(u)], v); }

    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    VertexSet closed_neighbors(int v) const { return adj_[static_cast<std::size_t>(v)] | vbit(v); }

    int degree(int v) const { return set_size(adj_[static_cast<std::size_t>(v)]); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    VertexSet vertex_mask() const { return full_set(n_); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw invalid_edge_error("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= vbit(v);
        adj_[static_cast<std::size_t>(v)] |= vbit(u);
    }

    // Edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u)
            for_each_vertex(adj_[static_cast<std::size_t>(u)] & ~below(u + 1),
                            [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw invalid_vertex_error("vertex " + std::to_string(v) +
                                       " outside graph of order " + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

Graph from_edge_list(int order, std::span<const std::pair<int, int>> edges);
Graph from_edge_list(int order, std::initializer_list<std::pair<int, int>> edges);

enum class StandardKind { Complete, Cycle, Path, CompleteMinusEdge };

// The named graph on vertices 0..n-1 in natural order; CompleteMinusEdge drops
// the edge (0, 1).
Graph standard_graph(StandardKind kind, int n);

// Vertex (a, b) of g [] h maps to index a * h.order() + b.
Graph cartesian_product(const Graph& g, const Graph& h);

// Subgraph induced by s, vertices relabeled in ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);

int component_count(const Graph& g);

// Vertices reachable from v (including v itself).
VertexSet reachable_from(const Graph& g, int v);

// Articulation points, DFS low-link. Disconnected input is handled per
// component.
VertexSet cut_vertices(const Graph& g);

// order >= 3, connected, and no cut vertex.
bool is_two_connected(const Graph& g);

// Apply a relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

} // namespace chordck
