#include "chordck/graph.hpp"

#include <algorithm>

namespace chordck {

Graph from_edge_list(int order, std::span<const std::pair<int, int>> edges) {
    Graph g(order);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph from_edge_list(int order, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph standard_graph(StandardKind kind, int n) {
    if (n < 1) throw invalid_parameter_error("standard graph needs order >= 1");
    Graph g(n);
    switch (kind) {
    case StandardKind::Complete:
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        break;
    case StandardKind::CompleteMinusEdge:
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!(u == 0 && v == 1)) g.add_edge(u, v);
        break;
    case StandardKind::Cycle:
        if (n < 3) throw invalid_parameter_error("cycle needs order >= 3");
        for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        break;
    case StandardKind::Path:
        for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        break;
    }
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const long long total = static_cast<long long>(g.order()) * h.order();
    if (total > kCapacity)
        throw capacity_error("product order " + std::to_string(total) + " exceeds capacity");
    Graph out(static_cast<int>(total));
    const int hk = h.order();
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < hk; ++b) {
            const int base = a * hk + b;
            for_each_vertex(h.neighbors(b), [&](int b2) {
                if (b2 > b) out.add_edge(base, a * hk + b2);
            });
            for_each_vertex(g.neighbors(a), [&](int a2) {
                if (a2 > a) out.add_edge(base, a2 * hk + b);
            });
        }
    }
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    std::vector<int> keep;
    for_each_vertex(s & g.vertex_mask(), [&](int v) { keep.push_back(v); });
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

VertexSet reachable_from(const Graph& g, int v) {
    VertexSet seen = vbit(v);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return reachable_from(g, 0) == g.vertex_mask();
}

int component_count(const Graph& g) {
    VertexSet todo = g.vertex_mask();
    int count = 0;
    while (todo) {
        todo &= ~reachable_from(g, first_vertex(todo));
        ++count;
    }
    return count;
}

namespace {

struct CutDfs {
    const Graph& g;
    std::vector<int> pre, low;
    int counter = 0;
    VertexSet cuts = 0;

    explicit CutDfs(const Graph& graph)
        : g(graph), pre(static_cast<std::size_t>(graph.order()), -1),
          low(static_cast<std::size_t>(graph.order()), -1) {}

    void run(int v, int parent) {
        pre[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
        int children = 0;
        for_each_vertex(g.neighbors(v), [&](int u) {
            if (pre[static_cast<std::size_t>(u)] < 0) {
                ++children;
                run(u, v);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(u)]);
                if (parent >= 0 && low[static_cast<std::size_t>(u)] >= pre[static_cast<std::size_t>(v)])
                    cuts |= vbit(v);
            } else if (u != parent) {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], pre[static_cast<std::size_t>(u)]);
            }
        });
        if (parent < 0 && children >= 2) cuts |= vbit(v);
    }
};

} // namespace

VertexSet cut_vertices(const Graph& g) {
    CutDfs dfs(g);
    for (int v = 0; v < g.order(); ++v)
        if (dfs.pre[static_cast<std::size_t>(v)] < 0) dfs.run(v, -1);
    return dfs.cuts;
}

bool is_two_connected(const Graph& g) {
    return g.order() >= 3 && is_connected(g) && cut_vertices(g) == 0;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    Graph out(g.order());
    for (const auto& [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

} // namespace chordck
