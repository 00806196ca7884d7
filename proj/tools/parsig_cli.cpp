// parsig: parity signed graph toolkit.
//
// Exit status: 0 success, 1 usage or input error, 2 capacity error,
// 3 a theorem check failed or a scan found an unexplained singleton.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parsig/enumerate.hpp"
#include "parsig/errors.hpp"
#include "parsig/families.hpp"
#include "parsig/graph6.hpp"
#include "parsig/report.hpp"
#include "parsig/rna.hpp"
#include "parsig/signs.hpp"
#include "parsig/verifier.hpp"

namespace {

using namespace parsig;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitDiscovery = 3;

struct RunConfig {
    std::string family;
    std::string in_path;
    std::string g6;
    std::string out_path;
    std::string format = "json-lines";
    int limit = kDefaultExactLimit;
    std::uint64_t seed = kDefaultSeed;
    int restarts = kDefaultRestarts;
    int max_n = kMaxVerifyOrder;
    int enumerate = 0;
    int scan_up_to = 0;
    std::string labels;
    std::string signs;
    bool heuristic = false;
};

// One input item: a decoded graph, optional trailing token (sign string),
// and a name for error messages.
struct InputItem {
    std::string source;
    std::optional<Graph> graph;
    std::string extra;
    std::string error;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InputError("cannot open --out file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void require_one_source(const RunConfig& c, bool allow_enumerate) {
    int count = !c.family.empty() + !c.in_path.empty() + !c.g6.empty() +
                (allow_enumerate && c.enumerate > 0);
    if (count != 1) {
        throw InputError(allow_enumerate
                             ? "give exactly one of --family, --in, --g6, --enumerate"
                             : "give exactly one of --family, --in, --g6");
    }
}

std::vector<InputItem> split_records(const std::vector<Graph6Line>& lines, const std::string& origin) {
    std::vector<InputItem> items;
    for (const auto& line : lines) {
        InputItem item;
        item.source = origin + ":" + std::to_string(line.line_number);
        std::istringstream tokens(line.text);
        std::string g6;
        tokens >> g6 >> item.extra;
        try {
            item.graph = parse_graph6(g6);
        } catch (const Error& e) {
            item.error = e.what();
        }
        items.push_back(std::move(item));
    }
    return items;
}

std::vector<InputItem> load_inputs(const RunConfig& c) {
    if (!c.family.empty()) {
        InputItem item;
        item.source = c.family;
        item.graph = build_family(parse_family(c.family));
        return {item};
    }
    if (!c.g6.empty()) {
        std::istringstream in(c.g6);
        return split_records(read_graph6_lines(in), "--g6");
    }
    if (c.enumerate > 0) {
        std::vector<InputItem> items;
        for (const Graph& g : enumerate_connected(c.enumerate)) {
            items.push_back({"enumerate", g, {}, {}});
        }
        return items;
    }
    if (c.in_path == "-") return split_records(read_graph6_lines(std::cin), "stdin");
    std::ifstream in(c.in_path);
    if (!in) throw InputError("cannot read --in file '" + c.in_path + "'");
    return split_records(read_graph6_lines(in), c.in_path);
}

// Reports a bad record on stderr; returns false so callers can skip it.
bool usable(const InputItem& item, bool& had_error) {
    if (item.graph) return true;
    std::cerr << "parsig: record " << item.source << ": " << item.error << '\n';
    had_error = true;
    return false;
}

int cmd_gen(const RunConfig& c, bool format_given) {
    require_one_source(c, true);
    Output out(c.out_path);
    bool had_error = false;
    auto items = load_inputs(c);
    if (!format_given) {
        for (const auto& item : items) {
            if (usable(item, had_error)) out.stream() << write_graph6(*item.graph) << '\n';
        }
        return had_error ? kExitInput : kExitOk;
    }
    ReportWriter w(out.stream(), parse_format(c.format), graph_columns());
    for (const auto& item : items) {
        if (!usable(item, had_error)) continue;
        Record r;
        r["graph6"] = write_graph6(*item.graph);
        r["n"] = item.graph->order();
        r["m"] = item.graph->size();
        w.write(r);
    }
    w.finish();
    return had_error ? kExitInput : kExitOk;
}

int cmd_label(const RunConfig& c) {
    require_one_source(c, false);
    Output out(c.out_path);
    ReportWriter w(out.stream(), parse_format(c.format), signed_columns());
    bool had_error = false;
    for (const auto& item : load_inputs(c)) {
        if (!usable(item, had_error)) continue;
        Labeling f;
        if (!c.labels.empty()) {
            f = parse_labeling(c.labels);
        } else if (!c.family.empty()) {
            f = proof_labeling(parse_family(c.family));
        } else {
            throw InputError("label needs --labels unless --family names a family with a proof labeling");
        }
        w.write(signed_record(induce_signs(*item.graph, f), f));
    }
    w.finish();
    return had_error ? kExitInput : kExitOk;
}

int cmd_rna(const RunConfig& c) {
    require_one_source(c, true);
    Output out(c.out_path);
    ReportWriter w(out.stream(), parse_format(c.format), rna_columns());
    const SolverLimits limits{c.limit};
    bool had_error = false;
    for (const auto& item : load_inputs(c)) {
        if (!usable(item, had_error)) continue;
        const Graph& g = *item.graph;
        if (c.heuristic) {
            w.write(rna_record(g, rna_heuristic(g, c.seed, c.restarts), std::nullopt, c.seed));
        } else {
            w.write(rna_record(g, rna_exact(g, limits), sigma_spectrum(g, limits), std::nullopt));
        }
    }
    w.finish();
    return had_error ? kExitInput : kExitOk;
}

int cmd_spectrum(const RunConfig& c) {
    require_one_source(c, true);
    Output out(c.out_path);
    ReportWriter w(out.stream(), parse_format(c.format), spectrum_columns());
    const SolverLimits limits{c.limit};
    bool had_error = false;
    for (const auto& item : load_inputs(c)) {
        if (!usable(item, had_error)) continue;
        w.write(spectrum_record(*item.graph, sigma_spectrum(*item.graph, limits)));
    }
    w.finish();
    return had_error ? kExitInput : kExitOk;
}

std::vector<Sign> resolve_signs(const std::string& text, const Graph& g, const std::string& source) {
    if (text == "all-" || text == "neg") {
        return std::vector<Sign>(static_cast<std::size_t>(g.size()), Sign::Negative);
    }
    if (text == "all+" || text == "pos") {
        return std::vector<Sign>(static_cast<std::size_t>(g.size()), Sign::Positive);
    }
    if (text.empty() && g.size() == 0) return {};
    if (text.empty()) throw InputError("record " + source + ": no signs given (--signs or a second column)");
    auto signs = parse_signs(text);
    if (static_cast<int>(signs.size()) != g.size()) {
        throw InputError("record " + source + ": " + std::to_string(signs.size()) + " signs for " +
                         std::to_string(g.size()) + " edges");
    }
    return signs;
}

int cmd_realizable(const RunConfig& c) {
    require_one_source(c, false);
    Output out(c.out_path);
    ReportWriter w(out.stream(), parse_format(c.format), realizable_columns());
    bool had_error = false;
    for (const auto& item : load_inputs(c)) {
        if (!usable(item, had_error)) continue;
        const std::string& text = c.signs.empty() ? item.extra : c.signs;
        const SignedGraph s(*item.graph, resolve_signs(text, *item.graph, item.source));
        w.write(realizable_record(s, is_parity_realizable(s)));
    }
    w.finish();
    return had_error ? kExitInput : kExitOk;
}

int cmd_verify(const RunConfig& c) {
    Output out(c.out_path);
    ReportWriter w(out.stream(), parse_format(c.format), theorem_columns());
    bool all_pass = true;
    for (const auto& check : verify_theorems(c.max_n, SolverLimits{c.limit})) {
        all_pass = all_pass && check.passed;
        w.write(theorem_record(check));
    }
    w.finish();
    return all_pass ? kExitOk : kExitDiscovery;
}

int cmd_scan(RunConfig c) {
    if (c.scan_up_to > 0 && c.enumerate > 0) throw InputError("give --enumerate or --max-n, not both");
    if (c.scan_up_to > 0) c.enumerate = c.scan_up_to;
    require_one_source(c, true);
    if (c.scan_up_to > 0) c.enumerate = 0;
    const SolverLimits limits{c.limit};
    ScanResult result;
    if (c.scan_up_to > 0) {
        result = conjecture_scan_enumerated(c.scan_up_to, limits);
    } else if (c.enumerate > 0) {
        std::vector<Graph> graphs = enumerate_connected(c.enumerate);
        result = conjecture_scan(graphs, limits);
    } else if (!c.family.empty()) {
        result = conjecture_scan({build_family(parse_family(c.family))}, limits);
    } else if (!c.g6.empty()) {
        std::istringstream in(c.g6);
        result = conjecture_scan_lines(read_graph6_lines(in), limits);
    } else if (c.in_path == "-") {
        result = conjecture_scan_lines(read_graph6_lines(std::cin), limits);
    } else {
        std::ifstream in(c.in_path);
        if (!in) throw InputError("cannot read --in file '" + c.in_path + "'");
        result = conjecture_scan_lines(read_graph6_lines(in), limits);
    }
    Output out(c.out_path);
    ReportWriter w(out.stream(), parse_format(c.format), conjecture_columns());
    for (const auto& r : result.records) w.write(conjecture_record(r));
    w.write_trailer(summary_record(result.summary));
    w.finish();
    for (const auto& issue : result.summary.skipped) {
        std::cerr << "parsig: skipped " << issue.source << ": " << issue.message << '\n';
    }
    return result.summary.other.empty() ? kExitOk : kExitDiscovery;
}

int cmd_convert(const RunConfig& c) {
    require_one_source(c, false);
    Output out(c.out_path);
    bool had_error = false;
    for (const auto& item : load_inputs(c)) {
        if (!usable(item, had_error)) continue;
        const std::string text = write_graph6(*item.graph);
        if (!(parse_graph6(text) == *item.graph)) {
            std::cerr << "parsig: record " << item.source << ": round trip mismatch\n";
            had_error = true;
            continue;
        }
        out.stream() << text << '\n';
    }
    return had_error ? kExitInput : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parsig: parity signed graphs, rna/adhika numbers and theorem checks"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App* sub, bool with_solver) {
        sub->add_option("--family", c.family, "family spec, e.g. complete:8 or complete_bipartite:2,3");
        sub->add_option("--in", c.in_path, "graph6 file, one record per line; - reads stdin");
        sub->add_option("--g6", c.g6, "inline graph6 record");
        sub->add_option("--out", c.out_path, "output path (default stdout)");
        sub->add_option("--format", c.format, "json-lines | csv | table");
        if (with_solver) {
            sub->add_option("--limit", c.limit, "exact-size limit")->check(CLI::Range(1, 62));
            sub->add_option("--seed", c.seed, "heuristic seed");
            sub->add_option("--restarts", c.restarts, "heuristic restarts")->check(CLI::PositiveNumber);
        }
    };

    auto* gen = app.add_subcommand("gen", "emit family or enumerated graphs as graph6");
    add_common(gen, false);
    gen->add_option("--enumerate", c.enumerate, "all connected graphs on n vertices (n <= 6)");

    auto* label = app.add_subcommand("label", "apply a labeling and print the induced signed graph");
    add_common(label, false);
    label->add_option("--labels", c.labels, "comma-separated labels by vertex (default: proof labeling)");

    auto* rna = app.add_subcommand("rna", "sigma- and sigma+ per graph");
    add_common(rna, true);
    rna->add_option("--enumerate", c.enumerate, "all connected graphs on n vertices (n <= 6)");
    rna->add_flag("--heuristic", c.heuristic, "balanced swap local search instead of enumeration");

    auto* spectrum = app.add_subcommand("spectrum", "achievable negative-edge counts per graph");
    add_common(spectrum, true);
    spectrum->add_option("--enumerate", c.enumerate, "all connected graphs on n vertices (n <= 6)");

    auto* realizable = app.add_subcommand("realizable", "decide whether a signed graph is a parity signed graph");
    add_common(realizable, false);
    realizable->add_option("--signs", c.signs, "'+'/'-' per edge in graph6 order, or all- / all+");

    auto* verify = app.add_subcommand("verify", "run the theorem checks");
    verify->add_option("--max-n", c.max_n, "largest order for exhaustive sweeps (3..6)");
    verify->add_option("--limit", c.limit, "exact-size limit")->check(CLI::Range(1, 62));
    verify->add_option("--out", c.out_path, "output path (default stdout)");
    verify->add_option("--format", c.format, "json-lines | csv | table");

    auto* scan = app.add_subcommand("scan", "spectrum scan for labeling-invariant negative counts");
    add_common(scan, true);
    scan->add_option("--enumerate", c.enumerate, "scan every connected graph on exactly N vertices (N <= 6)");
    scan->add_option("--max-n", c.scan_up_to, "scan every connected graph with 1 <= n <= N (N <= 6)");

    auto* convert = app.add_subcommand("convert", "decode and re-encode graph6 records");
    add_common(convert, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*gen) return cmd_gen(c, gen->count("--format") > 0);
        if (*label) return cmd_label(c);
        if (*rna) return cmd_rna(c);
        if (*spectrum) return cmd_spectrum(c);
        if (*realizable) return cmd_realizable(c);
        if (*verify) return cmd_verify(c);
        if (*scan) return cmd_scan(c);
        if (*convert) return cmd_convert(c);
    } catch (const CapacityError& e) {
        std::cerr << "parsig: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const Error& e) {
        std::cerr << "parsig: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
