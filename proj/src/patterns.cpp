#include "chordck/patterns.hpp"

#include <algorithm>
#include <cctype>

namespace chordck {

Pattern make_pattern(PatternKind kind, int parameter) {
    switch (kind) {
    case PatternKind::Claw: {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        return Pattern{kind, 0, std::move(g), "claw"};
    }
    case PatternKind::Path: {
        if (parameter < 1) throw invalid_parameter_error("path pattern needs t >= 1");
        return Pattern{kind, parameter, standard_graph(StandardKind::Path, parameter),
                       "p" + std::to_string(parameter)};
    }
    case PatternKind::Z: {
        if (parameter < 1) throw invalid_parameter_error("Z pattern needs i >= 1");
        Graph g(3 + parameter);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        for (int j = 2; j < 2 + parameter; ++j) g.add_edge(j, j + 1);
        return Pattern{kind, parameter, std::move(g), "z" + std::to_string(parameter)};
    }
    }
    throw invalid_parameter_error("unknown pattern kind");
}

std::optional<Pattern> pattern_from_name(std::string_view name) {
    std::string s;
    s.reserve(name.size());
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "claw" || s == "k13" || s == "k1,3") return make_pattern(PatternKind::Claw);
    if (s.size() >= 2 && (s[0] == 'p' || s[0] == 'z')) {
        int value = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
            value = value * 10 + (s[i] - '0');
        }
        if (value < 1 || value > kCapacity) return std::nullopt;
        return make_pattern(s[0] == 'p' ? PatternKind::Path : PatternKind::Z, value);
    }
    return std::nullopt;
}

namespace {

// All finders scan candidate slots in ascending vertex order, so the first
// completed embedding is the lexicographically least mapped tuple.

std::optional<Witness> find_claw(const Graph& g) {
    for (int c = 0; c < g.order(); ++c) {
        const VertexSet nc = g.neighbors(c);
        if (set_size(nc) < 3) continue;
        bool found = false;
        Witness w;
        for_each_vertex(nc, [&](int a) {
            if (found) return;
            const VertexSet bs = nc & ~g.closed_neighbors(a) & ~below(a + 1);
            for_each_vertex(bs, [&](int b) {
                if (found) return;
                const VertexSet ds = bs & ~g.closed_neighbors(b) & ~below(b + 1);
                if (ds) {
                    w = {c, a, b, first_vertex(ds)};
                    found = true;
                }
            });
        });
        if (found) return w;
    }
    return std::nullopt;
}

struct PathSearch {
    const Graph& g;
    int target;
    Witness path;

    bool extend(int last, int depth, VertexSet forbid) {
        const VertexSet cand = g.neighbors(last) & ~forbid;
        bool found = false;
        for_each_vertex(cand, [&](int v) {
            if (found) return;
            path[static_cast<std::size_t>(depth)] = v;
            if (depth + 1 == target)
                found = true;
            else
                found = extend(v, depth + 1, forbid | g.closed_neighbors(last));
        });
        return found;
    }
};

std::optional<Witness> find_path(const Graph& g, int t) {
    if (t == 1) return g.order() > 0 ? std::optional<Witness>{{0}} : std::nullopt;
    PathSearch search{g, t, Witness(static_cast<std::size_t>(t))};
    for (int v0 = 0; v0 < g.order(); ++v0) {
        search.path[0] = v0;
        if (search.extend(v0, 1, vbit(v0))) return search.path;
    }
    return std::nullopt;
}

// Pendant-path extension for Z(i): every new vertex must also avoid the
// closed neighborhoods of the two far triangle vertices.
struct ZSearch {
    const Graph& g;
    int total; // 3 + i
    Witness map;

    bool extend(int last, int depth, VertexSet forbid) {
        const VertexSet cand = g.neighbors(last) & ~forbid;
        bool found = false;
        for_each_vertex(cand, [&](int v) {
            if (found) return;
            map[static_cast<std::size_t>(depth)] = v;
            if (depth + 1 == total)
                found = true;
            else
                found = extend(v, depth + 1, forbid | g.closed_neighbors(last));
        });
        return found;
    }
};

std::optional<Witness> find_z(const Graph& g, int i) {
    const int total = 3 + i;
    if (g.order() < total) return std::nullopt;
    ZSearch search{g, total, Witness(static_cast<std::size_t>(total))};
    for (int a = 0; a < g.order(); ++a) {
        const VertexSet nbrs_a = g.neighbors(a) & ~below(a + 1);
        bool found = false;
        for_each_vertex(nbrs_a, [&](int b) {
            if (found) return;
            for_each_vertex(g.neighbors(a) & g.neighbors(b), [&](int c) {
                if (found) return;
                search.map[0] = a;
                search.map[1] = b;
                search.map[2] = c;
                const VertexSet forbid = g.closed_neighbors(a) | g.closed_neighbors(b) | vbit(c);
                found = search.extend(c, 3, forbid);
            });
        });
        if (found) return search.map;
    }
    return std::nullopt;
}

} // namespace

std::optional<Witness> contains_induced(const Graph& g, const Pattern& p) {
    if (p.order() > g.order()) return std::nullopt;
    switch (p.kind) {
    case PatternKind::Claw: return find_claw(g);
    case PatternKind::Path: return find_path(g, p.parameter);
    case PatternKind::Z: return find_z(g, p.parameter);
    }
    return std::nullopt;
}

std::optional<ForbiddenHit> first_forbidden_witness(const Graph& g,
                                                    std::span<const Pattern> forbidden) {
    for (std::size_t i = 0; i < forbidden.size(); ++i)
        if (auto w = contains_induced(g, forbidden[i])) return ForbiddenHit{i, std::move(*w)};
    return std::nullopt;
}

namespace {

struct HamPathSearch {
    const Graph& g;
    int n;
    std::vector<int> path;

    bool extend(int last, VertexSet visited) {
        if (set_size(visited) == n) return true;
        const VertexSet rest = g.vertex_mask() & ~visited;
        // Dead end: some unvisited vertex can no longer be reached at all.
        bool stuck = false;
        for_each_vertex(rest, [&](int u) {
            if (!stuck && u != last && (g.neighbors(u) & (rest | vbit(last))) == 0) stuck = true;
        });
        if (stuck) return false;
        std::vector<int> cand;
        for_each_vertex(g.neighbors(last) & rest, [&](int u) { cand.push_back(u); });
        std::sort(cand.begin(), cand.end(),
                  [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b)
                                                                        : a < b; });
        for (int u : cand) {
            path.push_back(u);
            if (extend(u, visited | vbit(u))) return true;
            path.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> is_traceable(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw invalid_parameter_error("traceability needs order >= 1");
    if (n == 1) return std::vector<int>{0};
    if (!is_connected(g)) return std::nullopt;
    std::vector<int> starts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) starts[static_cast<std::size_t>(v)] = v;
    std::sort(starts.begin(), starts.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b)
                                                                    : a < b; });
    HamPathSearch search{g, n, {}};
    for (int v : starts) {
        search.path = {v};
        if (search.extend(v, vbit(v))) return search.path;
    }
    return std::nullopt;
}

NeighborhoodShape neighborhood_structure(const Graph& g, int x) {
    if (x < 0 || x >= g.order()) throw invalid_vertex_error("vertex out of range");
    const VertexSet nbhd = g.neighbors(x);

    // Three pairwise nonadjacent neighbors rule out both lemma shapes (and
    // exhibit a claw centered at x).
    {
        std::array<int, 3> triple{-1, -1, -1};
        bool found = false;
        for_each_vertex(nbhd, [&](int a) {
            if (found) return;
            const VertexSet bs = nbhd & ~g.closed_neighbors(a) & ~below(a + 1);
            for_each_vertex(bs, [&](int b) {
                if (found) return;
                const VertexSet ds = bs & ~g.closed_neighbors(b) & ~below(b + 1);
                if (ds) {
                    triple = {a, b, first_vertex(ds)};
                    found = true;
                }
            });
        });
        if (found) {
            NeighborhoodShape shape;
            shape.kind = NeighborhoodKind::Other;
            shape.violating_triple = triple;
            return shape;
        }
    }

    if (nbhd == 0) {
        NeighborhoodShape shape;
        shape.kind = NeighborhoodKind::TwoDisjointCliques;
        return shape;
    }

    // Component of the least neighbor, inside the neighborhood.
    VertexSet comp = vbit(first_vertex(nbhd));
    for (;;) {
        VertexSet next = comp;
        for_each_vertex(comp, [&](int u) { next |= g.neighbors(u) & nbhd; });
        if (next == comp) break;
        comp = next;
    }

    if (comp == nbhd) {
        // Connected with independence number <= 2: a hamiltonian path exists.
        std::vector<int> label;
        for_each_vertex(nbhd, [&](int v) { label.push_back(v); });
        auto sub_path = is_traceable(induced_subgraph(g, nbhd));
        NeighborhoodShape shape;
        shape.kind = NeighborhoodKind::TraceableConnected;
        for (int idx : *sub_path) shape.path.push_back(label[static_cast<std::size_t>(idx)]);
        return shape;
    }

    // Disconnected with independence number <= 2: exactly two components,
    // each complete.
    NeighborhoodShape shape;
    shape.kind = NeighborhoodKind::TwoDisjointCliques;
    shape.clique_a = comp;
    shape.clique_b = nbhd & ~comp;
    return shape;
}

} // namespace chordck
