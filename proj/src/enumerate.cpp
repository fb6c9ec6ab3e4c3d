#include "chordck/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_map>

#include "chordck/graph6.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chordck {

double monotonic_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

namespace {

void validate(const ClassSpec& spec) {
    if (spec.target_order < 1 || spec.target_order > kCapacity)
        throw invalid_parameter_error("target order outside 1.." + std::to_string(kCapacity));
    for (const Pattern& p : spec.forbidden)
        if (p.order() < 2)
            throw invalid_parameter_error("forbidden pattern " + p.name + " has order < 2");
    if (spec.forbidden.empty() && !spec.max_degree && spec.target_order > 9)
        throw generation_refused_error(
            "refusing unrestricted generation above order 9; forbid a pattern or bound the degree");
    if (spec.max_degree && *spec.max_degree < 0)
        throw invalid_parameter_error("max degree bound must be >= 0");
}

Graph augment(const Graph& parent, VertexSet nbrs) {
    Graph child(parent.order() + 1);
    for (const auto& [u, v] : parent.edges()) child.add_edge(u, v);
    const int fresh = parent.order();
    for_each_vertex(nbrs, [&](int v) { child.add_edge(v, fresh); });
    return child;
}

struct ChildFilter {
    const ClassSpec& spec;
    int child_order;
    bool final_level;

    // Degree prune first (cheapest), then pattern detection. The parent is
    // already pattern-free, so any hit in the child involves the new vertex.
    enum class Reject { No, Degree, Pattern, Connectivity };

    Reject test(const Graph& parent, VertexSet nbrs, Graph& child_out) const {
        if (spec.max_degree) {
            const int bound = *spec.max_degree;
            if (set_size(nbrs) > bound) return Reject::Degree;
            bool over = false;
            for_each_vertex(nbrs, [&](int v) {
                if (parent.degree(v) + 1 > bound) over = true;
            });
            if (over) return Reject::Degree;
        }
        Graph child = augment(parent, nbrs);
        if (first_forbidden_witness(child, spec.forbidden)) return Reject::Pattern;
        if (final_level && spec.connectivity == Connectivity::TwoConnected &&
            !is_two_connected(child))
            return Reject::Connectivity;
        child_out = std::move(child);
        return Reject::No;
    }
};

using KeptMap = std::unordered_map<std::string, Graph>;

struct ExpandShared {
    const ClassSpec& spec;
    const GenOptions& options;
    double deadline;
    int child_order;
    VertexSet subset_lo; // lowest neighborhood subset (0 for Any, 1 otherwise)
};

void expand_one_parent(const Graph& parent, const ExpandShared& ctx, const ChildFilter& filter,
                       KeptMap& kept, LevelStats& stats) {
    const VertexSet limit = full_set(parent.order());
    Graph child;
    for (VertexSet nbrs = ctx.subset_lo; nbrs <= limit; ++nbrs) {
        ++stats.children;
        switch (filter.test(parent, nbrs, child)) {
        case ChildFilter::Reject::Degree:
            ++stats.pruned_degree;
            continue;
        case ChildFilter::Reject::Pattern:
            ++stats.pruned_pattern;
            continue;
        case ChildFilter::Reject::Connectivity:
            continue;
        case ChildFilter::Reject::No:
            break;
        }
        auto code = canonical_form(child);
        if (!kept.emplace(std::move(code.bytes), std::move(child)).second) ++stats.duplicates;
        if (nbrs == limit) break; // VertexSet is unsigned; avoid wrap at full word
    }
}

LevelResult finish_level(KeptMap&& kept, LevelStats stats, int child_order) {
    LevelResult out;
    out.kept.reserve(kept.size());
    for (auto& [code, graph] : kept)
        out.kept.emplace_back(CanonicalCode{code}, std::move(graph));
    std::sort(out.kept.begin(), out.kept.end(),
              [](const auto& a, const auto& b) { return a.first.bytes < b.first.bytes; });
    stats.order = child_order;
    stats.kept = out.kept.size();
    out.stats = stats;
    return out;
}

ExpandShared make_shared_ctx(const std::vector<Graph>& parents, const ClassSpec& spec,
                             const GenOptions& options, double deadline) {
    const int child_order = parents.empty() ? 0 : parents.front().order() + 1;
    const VertexSet lo = spec.connectivity == Connectivity::Any ? 0 : 1;
    return ExpandShared{spec, options, deadline, child_order, lo};
}

} // namespace

LevelResult expand_level_serial(const std::vector<Graph>& parents, const ClassSpec& spec,
                                const GenOptions& options, double deadline) {
    const ExpandShared ctx = make_shared_ctx(parents, spec, options, deadline);
    const ChildFilter filter{spec, ctx.child_order, ctx.child_order == spec.target_order};
    KeptMap kept;
    LevelStats stats;
    for (std::size_t i = 0; i < parents.size(); ++i) {
        if (kept.size() >= options.level_cap || monotonic_seconds() > deadline) {
            stats.truncated = true;
            break;
        }
        expand_one_parent(parents[i], ctx, filter, kept, stats);
    }
    return finish_level(std::move(kept), stats, ctx.child_order);
}

LevelResult expand_level_parallel(const std::vector<Graph>& parents, const ClassSpec& spec,
                                  const GenOptions& options, double deadline) {
    const ExpandShared ctx = make_shared_ctx(parents, spec, options, deadline);
    const ChildFilter filter{spec, ctx.child_order, ctx.child_order == spec.target_order};
    KeptMap kept;
    LevelStats stats;

    // Fixed-size parent batches; each batch fans out across threads into
    // thread-local maps that are merged on the spot. Cap and deadline are
    // checked only at batch boundaries so the kept set is a deterministic
    // function of the number of completed batches.
    const std::size_t batch = 256;
    const int threads = std::max(1, options.threads);
    for (std::size_t start = 0; start < parents.size(); start += batch) {
        if (kept.size() >= options.level_cap || monotonic_seconds() > deadline) {
            stats.truncated = true;
            break;
        }
        const std::size_t stop = std::min(parents.size(), start + batch);
        std::vector<KeptMap> local_kept(static_cast<std::size_t>(threads));
        std::vector<LevelStats> local_stats(static_cast<std::size_t>(threads));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
        for (std::size_t i = start; i < stop; ++i) {
#ifdef _OPENMP
            const std::size_t t = static_cast<std::size_t>(omp_get_thread_num());
#else
            const std::size_t t = 0;
#endif
            expand_one_parent(parents[i], ctx, filter, local_kept[t], local_stats[t]);
        }
        for (std::size_t t = 0; t < local_kept.size(); ++t) {
            stats.children += local_stats[t].children;
            stats.pruned_degree += local_stats[t].pruned_degree;
            stats.pruned_pattern += local_stats[t].pruned_pattern;
            stats.duplicates += local_stats[t].duplicates;
            for (auto& [code, graph] : local_kept[t])
                if (!kept.emplace(code, std::move(graph)).second) ++stats.duplicates;
        }
    }
    return finish_level(std::move(kept), stats, ctx.child_order);
}

GenResult generate_class(const ClassSpec& spec, const GenOptions& options) {
    validate(spec);
    const double started = monotonic_seconds();
    const double deadline = started + options.budget_seconds;

    GenResult result;
    std::vector<Graph> level{Graph(1)};
    {
        LevelStats first;
        first.order = 1;
        first.kept = 1;
        result.stats.levels.push_back(first);
    }

    for (int order = 1; order < spec.target_order; ++order) {
        LevelResult expanded =
            options.threads > 1 ? expand_level_parallel(level, spec, options, deadline)
                                : expand_level_serial(level, spec, options, deadline);
        if (expanded.stats.truncated) result.stats.complete = false;
        level.clear();
        level.reserve(expanded.kept.size());
        for (auto& [code, graph] : expanded.kept) level.push_back(std::move(graph));
        result.stats.levels.push_back(expanded.stats);
    }

    if (spec.target_order == 1) {
        // The sole order-1 graph, subject to the final filter.
        if (spec.connectivity == Connectivity::TwoConnected) level.clear();
        result.stats.levels.back().kept = level.size();
    }

    result.graphs = std::move(level);
    result.stats.emitted = result.graphs.size();
    result.stats.seconds = monotonic_seconds() - started;
    return result;
}

std::vector<Graph> stream_graph6(std::istream& in, const StreamOptions& options,
                                 std::vector<StreamDiagnostic>* diagnostics) {
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const error& e) {
            if (!options.skip_bad)
                throw parse_error("line " + std::to_string(lineno) + ": " + e.what(), lineno);
            if (diagnostics) diagnostics->push_back({lineno, e.what()});
        }
    }
    return out;
}

} // namespace chordck
