#include "chordck/theorems.hpp"

#include <algorithm>
#include <charconv>

#include "chordck/canonical.hpp"
#include "chordck/graph6.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chordck {

namespace {

std::vector<Pattern> forbid(std::initializer_list<const char*> names) {
    std::vector<Pattern> out;
    for (const char* name : names) out.push_back(*pattern_from_name(name));
    return out;
}

std::vector<TheoremSpec> build_catalog() {
    std::vector<TheoremSpec> cat;
    const auto add = [&](TheoremSpec spec) { cat.push_back(std::move(spec)); };

    add({"z1", 10, true, forbid({"claw", "z1"}), HypothesisExtra::None, 0,
         ConclusionKind::CycleOrChordedPancyclic, 0,
         "2-connected, order >= 10, {claw, z1}-free  =>  G = C_n or G is chorded pancyclic"});
    add({"z2", 10, true, forbid({"claw", "z2"}), HypothesisExtra::None, 0,
         ConclusionKind::CycleOrChordedPancyclic, 0,
         "2-connected, order >= 10, {claw, z2}-free  =>  G = C_n or G is chorded pancyclic"});
    add({"p4", 5, true, forbid({"claw", "p4"}), HypothesisExtra::None, 0,
         ConclusionKind::ChordedPancyclic, 0,
         "2-connected, order >= 5, {claw, p4}-free  =>  G is chorded pancyclic"});
    add({"p5", 8, true, forbid({"claw", "p5"}), HypothesisExtra::None, 0,
         ConclusionKind::ChordedPancyclic, 0,
         "2-connected, order >= 8, {claw, p5}-free  =>  G is chorded pancyclic"});
    add({"p6", 13, true, forbid({"claw", "p6"}), HypothesisExtra::None, 0,
         ConclusionKind::ChordedPancyclic, 0,
         "2-connected, order >= 13, {claw, p6}-free  =>  G is chorded pancyclic"});

    add({"lem_c4_to_c5_p5", 8, true, forbid({"claw", "p5"}), HypothesisExtra::HasC4, 0,
         ConclusionKind::ChordedCycleOfLength, 5,
         "2-connected, order >= 8, {claw, p5}-free, contains a C4  =>  contains a chorded C5"});
    add({"lem_c5_to_c4_p5", 7, true, forbid({"claw", "p5"}), HypothesisExtra::HasChordedC5, 0,
         ConclusionKind::ChordedCycleOfLength, 4,
         "2-connected, order >= 7, {claw, p5}-free, contains a chorded C5  =>  contains a chorded C4"});
    add({"lem_p6_c5", 11, true, forbid({"claw", "p6"}), HypothesisExtra::HasC4, 0,
         ConclusionKind::ChordedCycleOfLength, 5,
         "2-connected, order >= 11, {claw, p6}-free, contains a C4  =>  contains a chorded C5"});
    add({"lem_p6_c4", 10, true, forbid({"claw", "p6"}), HypothesisExtra::HasChordedC5, 0,
         ConclusionKind::ChordedCycleOfLength, 4,
         "2-connected, order >= 10, {claw, p6}-free, contains a chorded C5  =>  contains a chorded C4"});
    add({"lem_p6_c6", 13, true, forbid({"claw", "p6"}), HypothesisExtra::HasChordedC5, 0,
         ConclusionKind::ChordedCycleOfLength, 6,
         "2-connected, order >= 13, {claw, p6}-free, contains a chorded C5  =>  contains a chorded C6"});

    add({"lem_degree_k3", 0, false, forbid({"claw"}), HypothesisExtra::DegreeAtLeast, 3,
         ConclusionKind::ChordedCycleOfLength, 4,
         "claw-free, some deg(x) >= 5  =>  contains a chorded C4"});
    add({"lem_degree_k4", 0, false, forbid({"claw"}), HypothesisExtra::DegreeAtLeast, 4,
         ConclusionKind::ChordedCycleOfLength, 5,
         "claw-free, some deg(x) >= 7  =>  contains a chorded C5"});

    add({"pan_z1", 10, true, forbid({"claw", "z1"}), HypothesisExtra::None, 0,
         ConclusionKind::PancyclicOrCycle, 0,
         "2-connected, order >= 10, {claw, z1}-free  =>  G = C_n or G is pancyclic"});
    add({"pan_z2", 10, true, forbid({"claw", "z2"}), HypothesisExtra::None, 0,
         ConclusionKind::PancyclicOrCycle, 0,
         "2-connected, order >= 10, {claw, z2}-free  =>  G = C_n or G is pancyclic"});
    add({"pan_p4", 6, true, forbid({"claw", "p4"}), HypothesisExtra::None, 0,
         ConclusionKind::PancyclicOrCycle, 0,
         "2-connected, order >= 6, {claw, p4}-free  =>  G = C_n or G is pancyclic"});
    add({"pan_p5", 6, true, forbid({"claw", "p5"}), HypothesisExtra::None, 0,
         ConclusionKind::PancyclicOrCycle, 0,
         "2-connected, order >= 6, {claw, p5}-free  =>  G = C_n or G is pancyclic"});
    add({"pan_p6", 10, true, forbid({"claw", "p6"}), HypothesisExtra::None, 0,
         ConclusionKind::PancyclicOrCycle, 0,
         "2-connected, order >= 10, {claw, p6}-free  =>  G = C_n or G is pancyclic"});
    return cat;
}

} // namespace

const std::vector<TheoremSpec>& theorem_catalog() {
    static const std::vector<TheoremSpec> catalog = build_catalog();
    return catalog;
}

const TheoremSpec* find_theorem(std::string_view id) {
    if (id == "lem_degree") id = "lem_degree_k3";
    for (const TheoremSpec& t : theorem_catalog())
        if (t.id == id) return &t;
    return nullptr;
}

std::vector<std::string> theorem_ids() {
    std::vector<std::string> out;
    for (const TheoremSpec& t : theorem_catalog()) out.push_back(t.id);
    return out;
}

GraphEvaluation evaluate(const TheoremSpec& spec, const Graph& g) {
    GraphEvaluation ev;
    const int n = g.order();

    ev.order_ok = n >= spec.min_order;
    ev.connectivity_ok = !spec.requires_two_connected || is_two_connected(g);
    ev.freeness_violation = first_forbidden_witness(g, spec.forbidden);
    ev.freeness_ok = !ev.freeness_violation.has_value();

    switch (spec.extra) {
    case HypothesisExtra::None:
        ev.extra_ok = true;
        break;
    case HypothesisExtra::HasC4:
        if (n >= 4) ev.extra_witness = find_cycle(g, 4);
        ev.extra_ok = ev.extra_witness.has_value();
        break;
    case HypothesisExtra::HasChordedC5:
        if (n >= 5) ev.extra_witness = find_chorded_cycle(g, 5);
        ev.extra_ok = ev.extra_witness.has_value();
        break;
    case HypothesisExtra::DegreeAtLeast: {
        const int threshold = 2 * spec.extra_k - 1;
        for (int v = 0; v < n && !ev.degree_witness; ++v)
            if (g.degree(v) >= threshold) ev.degree_witness = v;
        ev.extra_ok = ev.degree_witness.has_value();
        break;
    }
    }

    ev.non_order_hypotheses_hold = ev.connectivity_ok && ev.freeness_ok && ev.extra_ok;
    ev.hypotheses_hold = ev.order_ok && ev.non_order_hypotheses_hold;

    switch (spec.conclusion) {
    case ConclusionKind::ChordedPancyclic: {
        if (n >= 3) {
            auto report = pancyclicity_report(g);
            ev.missing_lengths = report.missing_chorded_lengths;
        }
        ev.conclusion_holds = ev.missing_lengths.empty();
        break;
    }
    case ConclusionKind::CycleOrChordedPancyclic: {
        ev.isomorphic_to_cycle = n >= 3 && is_isomorphic(g, standard_graph(StandardKind::Cycle, n));
        if (n >= 3) {
            auto report = pancyclicity_report(g);
            ev.missing_lengths = report.missing_chorded_lengths;
        }
        ev.conclusion_holds = ev.isomorphic_to_cycle || ev.missing_lengths.empty();
        break;
    }
    case ConclusionKind::ChordedCycleOfLength: {
        const int m = spec.conclusion_length;
        if (n >= m) ev.conclusion_witness = find_chorded_cycle(g, m);
        ev.conclusion_holds = ev.conclusion_witness.has_value();
        if (!ev.conclusion_holds) ev.missing_lengths = {m};
        break;
    }
    case ConclusionKind::PancyclicOrCycle: {
        ev.isomorphic_to_cycle = n >= 3 && is_isomorphic(g, standard_graph(StandardKind::Cycle, n));
        if (n >= 3) {
            auto report = pancyclicity_report(g);
            ev.missing_lengths = report.missing_cycle_lengths;
        } else if (n > 0) {
            // orders 1..2 cannot carry a 3-cycle yet have an empty range
        }
        ev.conclusion_holds = ev.isomorphic_to_cycle || ev.missing_lengths.empty();
        break;
    }
    }

    ev.is_counterexample = ev.hypotheses_hold && !ev.conclusion_holds;
    if (!ev.order_ok)
        ev.failed_clause = "order";
    else if (!ev.connectivity_ok)
        ev.failed_clause = "two_connected";
    else if (!ev.freeness_ok)
        ev.failed_clause = "freeness";
    else if (!ev.extra_ok)
        ev.failed_clause = "extra";
    else if (!ev.conclusion_holds)
        ev.failed_clause = "conclusion";
    return ev;
}

SweepResult sweep_serial(const TheoremSpec& spec, std::span<const Graph> graphs) {
    SweepResult result;
    result.scanned = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const GraphEvaluation ev = evaluate(spec, graphs[i]);
        if (ev.hypotheses_hold) ++result.hypothesis_count;
        if (ev.is_counterexample) result.counterexample_indices.push_back(i);
    }
    return result;
}

SweepResult sweep_parallel(const TheoremSpec& spec, std::span<const Graph> graphs, int threads) {
    SweepResult result;
    result.scanned = graphs.size();
    const int nthreads = std::max(1, threads);
    std::vector<SweepResult> local(static_cast<std::size_t>(nthreads));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
#endif
    for (std::size_t i = 0; i < graphs.size(); ++i) {
#ifdef _OPENMP
        SweepResult& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#else
        SweepResult& mine = local[0];
#endif
        const GraphEvaluation ev = evaluate(spec, graphs[i]);
        if (ev.hypotheses_hold) ++mine.hypothesis_count;
        if (ev.is_counterexample) mine.counterexample_indices.push_back(i);
    }
    for (const SweepResult& mine : local) {
        result.hypothesis_count += mine.hypothesis_count;
        result.counterexample_indices.insert(result.counterexample_indices.end(),
                                             mine.counterexample_indices.begin(),
                                             mine.counterexample_indices.end());
    }
    std::sort(result.counterexample_indices.begin(), result.counterexample_indices.end());
    return result;
}

namespace {

ClassSpec class_for(const TheoremSpec& spec, int order) {
    ClassSpec cls;
    cls.target_order = order;
    cls.forbidden = spec.forbidden;
    cls.connectivity =
        spec.requires_two_connected ? Connectivity::TwoConnected : Connectivity::Any;
    return cls;
}

void sweep_order(const TheoremSpec& spec, std::span<const Graph> graphs, int order, bool exhaustive,
                 const VerifyOptions& options, VerificationReport& report) {
    const SweepResult sweep = options.threads > 1
                                  ? sweep_parallel(spec, graphs, options.threads)
                                  : sweep_serial(spec, graphs);
    report.scanned += sweep.scanned;
    report.hypothesis_count += sweep.hypothesis_count;
    for (std::size_t idx : sweep.counterexample_indices) {
        Counterexample cx;
        cx.order = order;
        cx.graph6 = to_graph6(graphs[idx]);
        cx.evaluation = evaluate(spec, graphs[idx]);
        report.counterexamples.push_back(std::move(cx));
    }
    report.per_order.push_back(OrderSummary{order, sweep.scanned, sweep.hypothesis_count, exhaustive});
}

void finish_report(VerificationReport& report, double started) {
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return a.order != b.order ? a.order < b.order : a.graph6 < b.graph6;
              });
    bool all_exhaustive = true;
    for (const OrderSummary& o : report.per_order) all_exhaustive &= o.exhaustive;
    report.mode = all_exhaustive ? VerifyMode::Exhaustive : VerifyMode::Sampled;
    report.seconds = monotonic_seconds() - started;
}

} // namespace

VerificationReport verify(const TheoremSpec& spec, int order_lo, int order_hi,
                          const VerifyOptions& options) {
    if (order_lo < 1 || order_hi < order_lo || order_hi > kCapacity)
        throw invalid_parameter_error("order range invalid or beyond capacity");
    const double started = monotonic_seconds();
    const double deadline = started + options.budget_seconds;

    VerificationReport report;
    report.theorem = spec.id;
    report.order_lo = order_lo;
    report.order_hi = order_hi;
    report.fuel = "builtin";

    for (int order = order_lo; order <= order_hi; ++order) {
        GenOptions gen;
        gen.threads = options.threads;
        gen.budget_seconds = deadline - monotonic_seconds();
        gen.level_cap = options.level_cap;
        if (gen.budget_seconds < 0) gen.budget_seconds = 0;
        const GenResult generated = generate_class(class_for(spec, order), gen);
        if (!generated.stats.complete && options.require_exhaustive)
            throw incomplete_verification_error(
                "budget exhausted generating order " + std::to_string(order) + " for " + spec.id +
                " after scanning " + std::to_string(report.scanned) + " graphs");
        sweep_order(spec, generated.graphs, order, generated.stats.complete, options, report);
    }
    finish_report(report, started);
    return report;
}

VerificationReport verify_stream(const TheoremSpec& spec, std::istream& fuel,
                                 const StreamOptions& stream_options,
                                 const VerifyOptions& options) {
    const double started = monotonic_seconds();
    VerificationReport report;
    report.theorem = spec.id;
    report.fuel = "graph6";

    std::vector<StreamDiagnostic> diags;
    const std::vector<Graph> graphs = stream_graph6(fuel, stream_options, &diags);
    int lo = 0, hi = 0;
    for (const Graph& g : graphs) {
        lo = lo == 0 ? g.order() : std::min(lo, g.order());
        hi = std::max(hi, g.order());
    }
    report.order_lo = lo;
    report.order_hi = hi;
    sweep_order(spec, graphs, hi, true, options, report);
    finish_report(report, started);
    return report;
}

SharpnessResult sharpness_search(const TheoremSpec& spec, int order, const VerifyOptions& options) {
    if (spec.min_order > 0 && order >= spec.min_order)
        throw invalid_parameter_error("sharpness search expects an order below the bound " +
                                      std::to_string(spec.min_order));
    const double started = monotonic_seconds();
    GenOptions gen;
    gen.threads = options.threads;
    gen.budget_seconds = options.budget_seconds;
    gen.level_cap = options.level_cap;
    const GenResult generated = generate_class(class_for(spec, order), gen);

    SharpnessResult result;
    result.exhaustive = generated.stats.complete;
    result.scanned = generated.graphs.size();
    for (const Graph& g : generated.graphs) {
        const GraphEvaluation ev = evaluate(spec, g);
        if (ev.non_order_hypotheses_hold && !ev.conclusion_holds) result.found.push_back(g);
    }
    std::sort(result.found.begin(), result.found.end(),
              [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
    result.seconds = monotonic_seconds() - started;
    return result;
}

namespace {

Graph fig7_graph() {
    // Vertices w x y z a1 a2 b -> 0..6: a 4-cycle wxyz with chord wy, a 2-tab
    // x-a1-a2-z, and b adjacent to x, a1, a2.
    return from_edge_list(7, {{0, 1},
                              {1, 2},
                              {2, 3},
                              {3, 0},
                              {0, 2},
                              {1, 4},
                              {4, 5},
                              {5, 3},
                              {6, 1},
                              {6, 4},
                              {6, 5}});
}

Graph p6_case2_graph() {
    // Vertices v w x y a1 a2 b -> 0..6: a 4-cycle vwxy with chord wy, a 2-tab
    // v-a1-a2-x, and b adjacent to x and a2.
    return from_edge_list(7, {{0, 1},
                              {1, 2},
                              {2, 3},
                              {3, 0},
                              {1, 3},
                              {0, 4},
                              {4, 5},
                              {5, 2},
                              {6, 2},
                              {6, 5}});
}

std::optional<int> parse_parametric(std::string_view name, std::string_view prefix) {
    if (name.size() <= prefix.size() + 1 || !name.starts_with(prefix)) return std::nullopt;
    if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
    const std::string_view digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.begin(), digits.end(), value);
    if (ec != std::errc{} || ptr != digits.end()) return std::nullopt;
    return value;
}

} // namespace

Graph gallery(std::string_view name) {
    if (name == "prism")
        return cartesian_product(standard_graph(StandardKind::Complete, 3),
                                 standard_graph(StandardKind::Complete, 2));
    if (name == "rook3")
        return cartesian_product(standard_graph(StandardKind::Complete, 3),
                                 standard_graph(StandardKind::Complete, 3));
    if (name == "k5_minus_e") return standard_graph(StandardKind::CompleteMinusEdge, 5);
    if (name == "fig7") return fig7_graph();
    if (name == "p6_case2") return p6_case2_graph();
    if (auto n = parse_parametric(name, "cycle")) return standard_graph(StandardKind::Cycle, *n);
    if (auto n = parse_parametric(name, "complete"))
        return standard_graph(StandardKind::Complete, *n);
    std::string valid;
    for (const std::string& v : gallery_names()) {
        if (!valid.empty()) valid += ", ";
        valid += v;
    }
    throw invalid_parameter_error("unknown gallery graph '" + std::string(name) +
                                  "'; valid names: " + valid);
}

std::vector<std::string> gallery_names() {
    return {"prism", "rook3", "k5_minus_e", "fig7", "p6_case2", "cycle(N)", "complete(N)"};
}

std::vector<GalleryCheck> gallery_self_check() {
    std::vector<GalleryCheck> checks;
    const Pattern claw = make_pattern(PatternKind::Claw);
    const Pattern p5 = make_pattern(PatternKind::Path, 5);

    {
        const Graph g = gallery("prism");
        const bool regular3 = [&] {
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) != 3) return false;
            return true;
        }();
        const bool ok = g.order() == 6 && g.edge_count() == 9 && regular3 &&
                        !contains_induced(g, claw);
        checks.push_back({"prism", ok, "3-regular, 9 edges, claw-free"});
    }
    {
        const Graph g = gallery("rook3");
        const bool ok = g.order() == 9 && g.edge_count() == 18 &&
                        !find_chorded_cycle(g, 4).has_value();
        checks.push_back({"rook3", ok, "9 vertices, 18 edges, no chorded C4"});
    }
    {
        const Graph g = gallery("k5_minus_e");
        const bool ok = g.order() == 5 && g.edge_count() == 9 && !g.adjacent(0, 1);
        checks.push_back({"k5_minus_e", ok, "K5 minus the edge (0,1)"});
    }
    {
        const Graph g = gallery("fig7");
        const bool ok = g.order() == 7 && g.edge_count() == 11 && !contains_induced(g, claw) &&
                        !contains_induced(g, p5) && is_two_connected(g) &&
                        !pancyclicity_report(g).chorded_pancyclic;
        checks.push_back({"fig7", ok, "claw-free, p5-free, 2-connected, not chorded pancyclic"});
    }
    {
        const Graph g = gallery("p6_case2");
        const bool ok = g.order() == 7 && g.edge_count() == 10 && !contains_induced(g, claw) &&
                        find_cycle(g, 4).has_value() && !find_chorded_cycle(g, 5).has_value();
        checks.push_back({"p6_case2", ok, "claw-free, has a C4, no chorded C5"});
    }
    return checks;
}

} // namespace chordck
