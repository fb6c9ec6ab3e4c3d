#include "chordck/cycles.hpp"

#include <algorithm>

namespace chordck {

namespace {

std::vector<std::pair<int, int>> chord_list(const Graph& g, const std::vector<int>& cycle) {
    const int m = static_cast<int>(cycle.size());
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (consecutive) continue;
            if (g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)]))
                chords.emplace_back(std::min(cycle[static_cast<std::size_t>(i)],
                                             cycle[static_cast<std::size_t>(j)]),
                                    std::max(cycle[static_cast<std::size_t>(i)],
                                             cycle[static_cast<std::size_t>(j)]));
        }
    std::sort(chords.begin(), chords.end());
    return chords;
}

// DFS over rooted oriented cycles: the root is the least cycle vertex, all
// others exceed it, and the second vertex is smaller than the last. Candidates
// are scanned in ascending order, so the first acceptable cycle is the least.
struct CycleSearch {
    const Graph& g;
    int m;
    bool want_chord;
    std::vector<int> path;
    std::optional<CycleWitness> result;

    bool extend(int root, int last, int depth, VertexSet used) {
        const VertexSet cand = g.neighbors(last) & ~used & ~below(root + 1);
        bool done = false;
        for_each_vertex(cand, [&](int v) {
            if (done) return;
            path[static_cast<std::size_t>(depth)] = v;
            if (depth + 1 == m) {
                if (g.adjacent(v, root) && path[1] < v) {
                    auto chords = chord_list(g, path);
                    if (!want_chord || !chords.empty()) {
                        result = CycleWitness{path, std::move(chords)};
                        done = true;
                    }
                }
            } else {
                done = extend(root, v, depth + 1, used | vbit(v));
            }
        });
        return done;
    }
};

std::optional<CycleWitness> search_cycle(const Graph& g, int m, bool want_chord) {
    if (m < 3 || m > g.order())
        throw invalid_parameter_error("cycle length " + std::to_string(m) +
                                      " outside 3.." + std::to_string(g.order()));
    CycleSearch search{g, m, want_chord, std::vector<int>(static_cast<std::size_t>(m)), {}};
    for (int root = 0; root + m <= g.order(); ++root) {
        search.path[0] = root;
        if (search.extend(root, root, 1, vbit(root))) return search.result;
    }
    return std::nullopt;
}

} // namespace

std::optional<CycleWitness> find_cycle(const Graph& g, int m) { return search_cycle(g, m, false); }

std::optional<CycleWitness> find_chorded_cycle(const Graph& g, int m) {
    if (m < 4 || m > g.order())
        throw invalid_parameter_error("chorded cycle length " + std::to_string(m) +
                                      " outside 4.." + std::to_string(g.order()));
    return search_cycle(g, m, true);
}

PancyclicityReport pancyclicity_report(const Graph& g) {
    const int n = g.order();
    if (n < 3) throw invalid_parameter_error("pancyclicity needs order >= 3");
    PancyclicityReport report;
    report.order = n;
    for (int m = 3; m <= n; ++m) {
        LengthReport entry{m, CycleStatus::None, std::nullopt};
        if (m >= 4) {
            if (auto chorded = find_chorded_cycle(g, m)) {
                entry.status = CycleStatus::Chorded;
                entry.witness = std::move(chorded);
            }
        }
        if (entry.status == CycleStatus::None) {
            if (auto plain = find_cycle(g, m)) {
                entry.status = CycleStatus::ChordlessOnly;
                entry.witness = std::move(plain);
            }
        }
        if (entry.status == CycleStatus::None) report.missing_cycle_lengths.push_back(m);
        if (m >= 4 && entry.status != CycleStatus::Chorded)
            report.missing_chorded_lengths.push_back(m);
        report.lengths.push_back(std::move(entry));
    }
    report.pancyclic = report.missing_cycle_lengths.empty();
    report.chorded_pancyclic = report.missing_chorded_lengths.empty();
    return report;
}

namespace {

struct TabSearch {
    const Graph& g;
    VertexSet host;
    int k;
    std::vector<int> path; // a0, internals..., end
    std::vector<KTab>* out;

    void extend(int last, int depth, VertexSet used) {
        if (depth == k + 1) {
            const int a0 = path[0];
            for_each_vertex(g.neighbors(last) & host & ~below(a0 + 1), [&](int end) {
                if (end == a0) return;
                path[static_cast<std::size_t>(depth)] = end;
                out->push_back(KTab{host, path, k});
            });
            return;
        }
        for_each_vertex(g.neighbors(last) & ~host & ~used, [&](int v) {
            path[static_cast<std::size_t>(depth)] = v;
            extend(v, depth + 1, used | vbit(v));
        });
    }
};

void validate_host(const Graph& g, VertexSet host) {
    if ((host & ~g.vertex_mask()) != 0)
        throw invalid_vertex_error("host set contains vertices outside the graph");
    if (host == 0) throw invalid_parameter_error("host set is empty");
    if (host == g.vertex_mask())
        throw invalid_parameter_error("host set must be a proper subset");
}

} // namespace

std::vector<KTab> k_tabs(const Graph& g, VertexSet host, int k) {
    validate_host(g, host);
    if (k < 1) throw invalid_parameter_error("tab needs k >= 1");
    std::vector<KTab> out;
    TabSearch search{g, host, k, std::vector<int>(static_cast<std::size_t>(k + 2)), &out};
    for_each_vertex(host, [&](int a0) {
        search.path[0] = a0;
        search.extend(a0, 1, 0);
    });
    std::sort(out.begin(), out.end(),
              [](const KTab& a, const KTab& b) { return a.path < b.path; });
    return out;
}

std::optional<KTab> minimal_k_tab(const Graph& g, VertexSet host) {
    validate_host(g, host);
    const int max_k = g.order() - set_size(host);
    for (int k = 1; k <= max_k; ++k) {
        auto tabs = k_tabs(g, host, k);
        if (tabs.empty()) continue;
        for (const KTab& tab : tabs)
            if (g.adjacent(tab.path.front(), tab.path.back())) return tab;
        return tabs.front();
    }
    return std::nullopt;
}

} // namespace chordck
