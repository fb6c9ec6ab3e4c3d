#include "chordck/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chordck/canonical.hpp"
#include "chordck/graph6.hpp"
#include "chordck/json_io.hpp"
#include "chordck/theorems.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chordck::cli {

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (const std::string& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::pair<int, int> parse_order_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw usage_error("cannot parse order range '" + text + "' (expected N or A..B)");
    }
}

const std::vector<std::string> kKnownProps = {
    "claw-free", "p4-free",  "p5-free",   "p6-free",  "z1-free",          "z2-free",
    "connected", "2conn",    "traceable", "pancyclic", "chorded-pancyclic"};

void validate_props(const std::vector<std::string>& props) {
    for (const std::string& p : props) {
        if (std::find(kKnownProps.begin(), kKnownProps.end(), p) != kKnownProps.end()) continue;
        // generic pattern freeness: "<name>-free"
        if (p.size() > 5 && p.ends_with("-free") &&
            pattern_from_name(p.substr(0, p.size() - 5)))
            continue;
        throw usage_error("unknown property '" + p + "'; valid: " + join(kKnownProps, ", "));
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

Command parse_args(const std::vector<std::string>& args) {
    Command cmd;
    CLI::App app{"chordck: forbidden-subgraph and chorded-pancyclicity checker"};
    app.require_subcommand(1);

    std::string orders_text, order_text, budget_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--threads", cmd.threads, "worker threads (0 = auto, CHORDCK_THREADS)");
        sub->add_flag("--json", cmd.json, "emit the full JSON report");
        sub->add_option("--budget", cmd.budget_seconds, "wall-clock budget in seconds");
    };

    auto* check = app.add_subcommand("check", "evaluate properties of input graphs");
    check->add_option("--g6", cmd.g6_input, "graph6 file, or - for stdin");
    check->add_option("--edges", cmd.edges_input, "edge-list file (n, then 'u v' lines), or -");
    std::string props_text;
    check->add_option("--props", props_text, "comma-separated properties to evaluate");
    check->add_flag("--skip-bad", cmd.skip_bad, "skip malformed records with a diagnostic");
    add_common(check);

    auto* verify = app.add_subcommand("verify", "sweep a theorem over a graph class");
    verify->add_option("--theorem", cmd.theorem_id, "theorem id")->required();
    verify->add_option("--orders", orders_text, "order range A..B");
    verify->add_option("--order", order_text, "single order");
    verify->add_option("--g6", cmd.g6_input, "graph6 fuel instead of builtin generation");
    verify->add_flag("--skip-bad", cmd.skip_bad, "skip malformed fuel records");
    add_common(verify);

    auto* generate = app.add_subcommand("generate", "emit one graph per isomorphism class");
    generate->add_option("--order", order_text, "target order")->required();
    std::string forbid_text;
    generate->add_option("--forbid", forbid_text, "comma-separated forbidden patterns");
    generate->add_option("--require", cmd.require, "connectivity: any | connected | 2conn")
        ->check(CLI::IsMember({"any", "connected", "2conn"}));
    generate->add_option("--max-degree", cmd.max_degree, "maximum degree bound");
    std::string emit_text = "g6";
    generate->add_option("--emit", emit_text, "output format: g6 | json")
        ->check(CLI::IsMember({"g6", "json"}));
    add_common(generate);

    auto* gallery_cmd = app.add_subcommand("gallery", "named graphs with fixed labelings");
    gallery_cmd->add_option("name", cmd.gallery_name, "graph name (omit to list)");
    add_common(gallery_cmd);

    auto* search = app.add_subcommand("search", "sharpness search below a theorem's order bound");
    search->add_option("--theorem", cmd.theorem_id, "theorem id")->required();
    search->add_option("--order", order_text, "order to search")->required();
    add_common(search);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        throw help_requested{help.str()};
    } catch (const CLI::ParseError& e) {
        throw usage_error(std::string(e.what()) + "\nvalid theorem ids: " +
                          join(theorem_ids(), ", "));
    }

    if (check->parsed()) cmd.verb = Verb::Check;
    if (verify->parsed()) cmd.verb = Verb::Verify;
    if (generate->parsed()) cmd.verb = Verb::Generate;
    if (gallery_cmd->parsed()) cmd.verb = Verb::Gallery;
    if (search->parsed()) cmd.verb = Verb::Search;

    if (!props_text.empty()) {
        cmd.props = split_list(props_text);
        validate_props(cmd.props);
    }
    if (!forbid_text.empty()) {
        cmd.forbid = split_list(forbid_text);
        for (const std::string& name : cmd.forbid)
            if (!pattern_from_name(name))
                throw usage_error("unknown pattern '" + name +
                                  "'; valid names: claw, p4, p5, p6, z1, z2");
    }
    cmd.emit = emit_text;

    if (!orders_text.empty()) {
        std::tie(cmd.order_lo, cmd.order_hi) = parse_order_range(orders_text);
    } else if (!order_text.empty()) {
        std::tie(cmd.order_lo, cmd.order_hi) = parse_order_range(order_text);
        if (cmd.order_lo != cmd.order_hi) throw usage_error("--order takes a single order");
    }
    if (cmd.verb == Verb::Verify || cmd.verb == Verb::Search || cmd.verb == Verb::Generate) {
        if (cmd.order_lo == 0 && cmd.g6_input.empty())
            throw usage_error("an order (--orders A..B or --order N) is required");
        if (cmd.order_lo != 0 &&
            (cmd.order_lo < 1 || cmd.order_hi < cmd.order_lo || cmd.order_hi > kCapacity))
            throw usage_error("order range must satisfy 1 <= A <= B <= " +
                              std::to_string(kCapacity));
    }
    if ((cmd.verb == Verb::Verify || cmd.verb == Verb::Search) &&
        !find_theorem(cmd.theorem_id))
        throw usage_error("unknown theorem '" + cmd.theorem_id +
                          "'; valid ids: " + join(theorem_ids(), ", "));
    if (cmd.verb == Verb::Check && cmd.g6_input.empty() && cmd.edges_input.empty())
        throw usage_error("check needs --g6 PATH|- or --edges PATH|-");
    return cmd;
}

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CHORDCK_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double resolve_budget(double requested) {
    return requested > 0 ? requested : std::numeric_limits<double>::infinity();
}

std::vector<Graph> load_graphs(const Command& cmd, std::istream& in,
                               std::vector<StreamDiagnostic>* diags) {
    if (!cmd.edges_input.empty()) {
        std::ostringstream buffer;
        if (cmd.edges_input == "-") {
            buffer << in.rdbuf();
        } else {
            std::ifstream file(cmd.edges_input);
            if (!file) throw std::ios_base::failure("cannot open " + cmd.edges_input);
            buffer << file.rdbuf();
        }
        return {parse_edge_list_text(buffer.str())};
    }
    const StreamOptions opts{cmd.skip_bad};
    if (cmd.g6_input == "-") return stream_graph6(in, opts, diags);
    std::ifstream file(cmd.g6_input);
    if (!file) throw std::ios_base::failure("cannot open " + cmd.g6_input);
    return stream_graph6(file, opts, diags);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string eval_prop(const Graph& g, const std::string& prop) {
    if (prop == "connected") return yesno(is_connected(g));
    if (prop == "2conn") return yesno(is_two_connected(g));
    if (prop == "traceable") return yesno(g.order() >= 1 && is_traceable(g).has_value());
    if (prop == "pancyclic")
        return yesno(g.order() < 3 || pancyclicity_report(g).pancyclic);
    if (prop == "chorded-pancyclic")
        return yesno(g.order() < 3 || pancyclicity_report(g).chorded_pancyclic);
    const Pattern p = *pattern_from_name(prop.substr(0, prop.size() - 5));
    return yesno(!contains_induced(g, p).has_value());
}

int run_check(const Command& cmd, std::istream& in, std::ostream& out) {
    std::vector<StreamDiagnostic> diags;
    const std::vector<Graph> graphs = load_graphs(cmd, in, &diags);
    std::vector<std::string> props = cmd.props;
    if (props.empty()) props = {"claw-free", "2conn", "pancyclic", "chorded-pancyclic"};

    json rows = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        if (cmd.json) {
            json row;
            row["index"] = i;
            row["graph6"] = to_graph6(g);
            row["order"] = g.order();
            row["edges"] = g.edge_count();
            for (const std::string& p : props) row[p] = eval_prop(g, p) == "yes";
            rows.push_back(row);
        } else {
            out << to_graph6(g) << "  n=" << g.order() << " m=" << g.edge_count();
            for (const std::string& p : props) out << "  " << p << "=" << eval_prop(g, p);
            out << "\n";
        }
    }
    if (cmd.json) {
        json j;
        j["graphs"] = rows;
        json dj = json::array();
        for (const auto& d : diags) {
            json one;
            one["line"] = d.line;
            one["message"] = d.message;
            dj.push_back(one);
        }
        j["diagnostics"] = dj;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& d : diags)
            out << "# line " << d.line << " skipped: " << d.message << "\n";
    }
    return kExitVerified;
}

int report_exit(const VerificationReport& report) {
    if (!report.counterexamples.empty()) return kExitCounterexamples;
    if (report.mode == VerifyMode::Sampled) return kExitIncomplete;
    return kExitVerified;
}

void print_report_text(const VerificationReport& report, const TheoremSpec& spec,
                       std::ostream& out) {
    out << "theorem " << spec.id << ": " << spec.summary << "\n";
    for (const OrderSummary& o : report.per_order)
        out << "  order " << o.order << ": scanned " << o.scanned << ", hypotheses held "
            << o.hypothesis_count << (o.exhaustive ? "" : " [truncated]") << "\n";
    out << "mode: " << (report.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled") << "\n";
    out << "counterexamples: " << report.counterexamples.size() << "\n";
    for (const Counterexample& cx : report.counterexamples) {
        out << "  " << cx.graph6 << "  (order " << cx.order << ", failed "
            << cx.evaluation.failed_clause;
        if (!cx.evaluation.missing_lengths.empty()) {
            out << ", missing lengths";
            for (int m : cx.evaluation.missing_lengths) out << " " << m;
        }
        out << ")\n";
    }
    out << "seconds: " << report.seconds << "\n";
}

int run_verify(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    const TheoremSpec& spec = *find_theorem(cmd.theorem_id);

    for (const GalleryCheck& check : gallery_self_check()) {
        if (!check.ok) {
            err << "gallery self-check failed for " << check.name << " (" << check.detail
                << ")\n";
            return kExitCounterexamples;
        }
    }

    VerifyOptions options;
    options.threads = resolve_threads(cmd.threads);
    options.budget_seconds = resolve_budget(cmd.budget_seconds);

    VerificationReport report;
    if (!cmd.g6_input.empty()) {
        std::vector<StreamDiagnostic> diags;
        if (cmd.g6_input == "-") {
            report = verify_stream(spec, in, StreamOptions{cmd.skip_bad}, options);
        } else {
            std::ifstream file(cmd.g6_input);
            if (!file) throw std::ios_base::failure("cannot open " + cmd.g6_input);
            report = verify_stream(spec, file, StreamOptions{cmd.skip_bad}, options);
        }
    } else {
        report = verify(spec, cmd.order_lo, cmd.order_hi, options);
    }

    if (cmd.json)
        out << to_json(report, spec).dump(2) << "\n";
    else
        print_report_text(report, spec, out);
    return report_exit(report);
}

int run_generate(const Command& cmd, std::ostream& out, std::ostream& err) {
    ClassSpec spec;
    spec.target_order = cmd.order_lo;
    for (const std::string& name : cmd.forbid) spec.forbidden.push_back(*pattern_from_name(name));
    spec.connectivity = cmd.require == "any"       ? Connectivity::Any
                        : cmd.require == "2conn"   ? Connectivity::TwoConnected
                                                   : Connectivity::Connected;
    spec.max_degree = cmd.max_degree;

    GenOptions options;
    options.threads = resolve_threads(cmd.threads);
    options.budget_seconds = resolve_budget(cmd.budget_seconds);

    const GenResult result = generate_class(spec, options);
    if (cmd.emit == "json") {
        json j;
        json graphs = json::array();
        for (const Graph& g : result.graphs) graphs.push_back(to_graph6(g));
        j["graphs"] = graphs;
        j["stats"] = to_json(result.stats);
        out << j.dump(2) << "\n";
    } else {
        for (const Graph& g : result.graphs) out << to_graph6(g) << "\n";
        err << to_json(result.stats).dump() << "\n";
    }
    return result.stats.complete ? kExitVerified : kExitIncomplete;
}

int run_gallery(const Command& cmd, std::ostream& out) {
    if (cmd.gallery_name.empty()) {
        for (const std::string& name : gallery_names()) out << name << "\n";
        return kExitVerified;
    }
    const Graph g = gallery(cmd.gallery_name);
    bool confirmed = true;
    std::string detail;
    for (const GalleryCheck& check : gallery_self_check()) {
        if (check.name == cmd.gallery_name) {
            confirmed = check.ok;
            detail = check.detail;
        }
    }
    if (cmd.json) {
        json j;
        j["name"] = cmd.gallery_name;
        j["graph6"] = to_graph6(g);
        j["order"] = g.order();
        j["edges"] = g.edge_count();
        if (!detail.empty()) {
            j["property"] = detail;
            j["confirmed"] = confirmed;
        }
        out << j.dump(2) << "\n";
    } else {
        out << to_graph6(g) << "\n";
        if (!detail.empty())
            out << detail << (confirmed ? ": confirmed" : ": FAILED") << "\n";
    }
    return confirmed ? kExitVerified : kExitCounterexamples;
}

int run_search(const Command& cmd, std::ostream& out) {
    const TheoremSpec& spec = *find_theorem(cmd.theorem_id);
    VerifyOptions options;
    options.threads = resolve_threads(cmd.threads);
    options.budget_seconds = resolve_budget(cmd.budget_seconds);

    const SharpnessResult result = sharpness_search(spec, cmd.order_lo, options);
    if (cmd.json) {
        json j;
        j["theorem"] = spec.id;
        j["order"] = cmd.order_lo;
        json found = json::array();
        for (const Graph& g : result.found) found.push_back(to_graph6(g));
        j["found"] = found;
        j["exhaustive"] = result.exhaustive;
        j["scanned"] = result.scanned;
        j["seconds"] = result.seconds;
        out << j.dump(2) << "\n";
    } else {
        out << "sharpness search for " << spec.id << " at order " << cmd.order_lo << " ("
            << (result.exhaustive ? "exhaustive" : "budgeted") << ", scanned " << result.scanned
            << ")\n";
        for (const Graph& g : result.found) out << to_graph6(g) << "\n";
        out << "found: " << result.found.size() << "\n";
    }
    if (!result.found.empty()) return kExitCounterexamples;
    return result.exhaustive ? kExitVerified : kExitIncomplete;
}

} // namespace

int execute(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (cmd.verb) {
        case Verb::Check: return run_check(cmd, in, out);
        case Verb::Verify: return run_verify(cmd, in, out, err);
        case Verb::Generate: return run_generate(cmd, out, err);
        case Verb::Gallery: return run_gallery(cmd, out);
        case Verb::Search: return run_search(cmd, out);
        }
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return kExitNoInput;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const generation_refused_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const invalid_parameter_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        const Command cmd = parse_args(args);
        return execute(cmd, std::cin, std::cout, std::cerr);
    } catch (const help_requested& h) {
        std::cout << h.text;
        return kExitVerified;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace chordck::cli
