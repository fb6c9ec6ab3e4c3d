#include "chordck/json_io.hpp"

namespace chordck {

json to_json(const CycleWitness& witness) {
    json j;
    j["cycle"] = witness.vertices;
    json chords = json::array();
    for (const auto& [u, v] : witness.chords) chords.push_back(json::array({u, v}));
    j["chords"] = chords;
    return j;
}

json to_json(const GraphEvaluation& ev, const TheoremSpec& spec) {
    json j;
    j["hypotheses_hold"] = ev.hypotheses_hold;
    j["order_ok"] = ev.order_ok;
    if (spec.requires_two_connected) j["two_connected"] = ev.connectivity_ok;
    j["free"] = ev.freeness_ok;
    if (ev.freeness_violation) {
        json v;
        v["pattern"] = spec.forbidden[ev.freeness_violation->pattern_index].name;
        v["vertices"] = ev.freeness_violation->witness;
        j["freeness_violation"] = v;
    }
    if (spec.extra != HypothesisExtra::None) {
        j["extra_ok"] = ev.extra_ok;
        if (ev.extra_witness) j["extra_witness"] = to_json(*ev.extra_witness);
        if (ev.degree_witness) j["degree_witness"] = *ev.degree_witness;
    }
    j["conclusion_holds"] = ev.conclusion_holds;
    if (spec.conclusion == ConclusionKind::CycleOrChordedPancyclic ||
        spec.conclusion == ConclusionKind::PancyclicOrCycle)
        j["is_cn"] = ev.isomorphic_to_cycle;
    j["missing_lengths"] = ev.missing_lengths;
    if (ev.conclusion_witness) j["witness"] = to_json(*ev.conclusion_witness);
    j["failed_clause"] = ev.failed_clause;
    return j;
}

json to_json(const GenStats& stats) {
    json j;
    json levels = json::array();
    for (const LevelStats& l : stats.levels) {
        json lj;
        lj["order"] = l.order;
        lj["kept"] = l.kept;
        lj["children"] = l.children;
        lj["pruned_degree"] = l.pruned_degree;
        lj["pruned_pattern"] = l.pruned_pattern;
        lj["duplicates"] = l.duplicates;
        lj["truncated"] = l.truncated;
        levels.push_back(lj);
    }
    j["levels"] = levels;
    j["emitted"] = stats.emitted;
    j["complete"] = stats.complete;
    j["seconds"] = stats.seconds;
    return j;
}

json to_json(const VerificationReport& report, const TheoremSpec& spec) {
    json j;
    j["theorem"] = report.theorem;
    if (report.order_lo == report.order_hi)
        j["order"] = report.order_lo;
    else
        j["order"] = std::to_string(report.order_lo) + ".." + std::to_string(report.order_hi);
    j["mode"] = report.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled";
    j["fuel"] = report.fuel;
    j["scanned"] = report.scanned;
    j["hypothesis_count"] = report.hypothesis_count;
    json cxs = json::array();
    for (const Counterexample& cx : report.counterexamples) {
        json c;
        c["graph6"] = cx.graph6;
        c["order"] = cx.order;
        c["failed_clause"] = cx.evaluation.failed_clause;
        c["missing_lengths"] = cx.evaluation.missing_lengths;
        c["evaluation"] = to_json(cx.evaluation, spec);
        cxs.push_back(c);
    }
    j["counterexamples"] = cxs;
    json orders = json::array();
    for (const OrderSummary& o : report.per_order) {
        json oj;
        oj["order"] = o.order;
        oj["scanned"] = o.scanned;
        oj["hypothesis_count"] = o.hypothesis_count;
        oj["exhaustive"] = o.exhaustive;
        orders.push_back(oj);
    }
    j["per_order"] = orders;
    j["seconds"] = report.seconds;
    return j;
}

} // namespace chordck
