#include "parsig/report.hpp"

#include <algorithm>

#include "parsig/errors.hpp"
#include "parsig/graph6.hpp"

namespace parsig {

namespace {

Record witness_json(const Witness& w) {
    Record r;
    r["role"] = w.role;
    r["graph6"] = w.graph6;
    if (!w.signs.empty()) r["signs"] = w.signs;
    if (!w.labeling.empty()) r["labeling"] = w.labeling;
    if (!w.odd_set.empty()) r["odd_set"] = w.odd_set;
    if (!w.detail.empty()) r["detail"] = w.detail;
    return r;
}

std::string scalar_text(const Record& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ';';
            out += v[i].is_object() ? v[i].dump() : scalar_text(v[i]);
        }
        return out;
    }
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "json-lines" || text == "jsonl" || text == "json") return Format::JsonLines;
    if (text == "csv") return Format::Csv;
    if (text == "table") return Format::Table;
    throw InputError("unknown format '" + std::string(text) + "' (json-lines, csv, table)");
}

Record rna_record(const Graph& g, const RnaResult& result, const std::optional<SpectrumReport>& spectrum,
                  std::optional<std::uint64_t> seed) {
    Record r;
    r["graph6"] = write_graph6(g);
    r["n"] = g.order();
    r["m"] = g.size();
    r["sigma_minus"] = result.value;
    r["sigma_plus"] = g.size() - result.value;
    r["spectrum"] = spectrum ? Record(spectrum->values) : Record::array();
    r["witness"] = mask_vertices(result.witness.odd_set());
    r["method"] = std::string(to_string(result.method));
    r["seed"] = seed ? Record(*seed) : Record(nullptr);
    r["examined"] = result.examined;
    return r;
}

Record spectrum_record(const Graph& g, const SpectrumReport& spectrum) {
    Record r;
    r["graph6"] = write_graph6(g);
    r["n"] = g.order();
    r["m"] = g.size();
    r["spectrum"] = spectrum.values;
    r["min"] = spectrum.min;
    r["max"] = spectrum.max;
    r["singleton"] = spectrum.singleton;
    return r;
}

Record signed_record(const SignedGraph& s, const std::optional<Labeling>& labeling) {
    Record r;
    r["graph6"] = write_graph6(s.graph());
    r["n"] = s.graph().order();
    r["m"] = s.graph().size();
    r["labeling"] = labeling ? to_string(*labeling) : std::string();
    r["signs"] = sign_string(s);
    r["negative"] = s.negative_count();
    r["positive"] = s.positive_count();
    r["homogeneity"] = std::string(to_string(homogeneity(s)));
    r["balanced"] = is_balanced(s).has_value();
    return r;
}

Record realizable_record(const SignedGraph& s, const std::optional<Labeling>& labeling) {
    Record r;
    r["graph6"] = write_graph6(s.graph());
    r["n"] = s.graph().order();
    r["m"] = s.graph().size();
    r["signs"] = sign_string(s);
    r["realizable"] = labeling.has_value();
    r["labeling"] = labeling ? to_string(*labeling) : std::string();
    r["balanced"] = is_balanced(s).has_value();
    return r;
}

Record theorem_record(const TheoremCheck& check) {
    Record r;
    r["id"] = check.id;
    r["status"] = check.passed ? "pass" : "fail";
    r["cases"] = check.cases;
    r["scope"] = check.scope;
    Record w = Record::array();
    for (const auto& x : check.witnesses) w.push_back(witness_json(x));
    r["witness"] = std::move(w);
    return r;
}

Record conjecture_record(const ConjectureRecord& c) {
    Record r;
    r["graph6"] = c.graph6;
    r["n"] = c.n;
    r["m"] = c.m;
    r["spectrum"] = c.spectrum.values;
    r["singleton"] = c.singleton;
    r["classification"] = std::string(to_string(c.classification));
    r["odd_star"] = c.odd_star;
    return r;
}

Record summary_record(const ScanSummary& s) {
    Record r;
    r["summary"] = true;
    r["scanned"] = s.scanned;
    r["singletons"] = s.singletons;
    r["complete"] = s.complete;
    r["odd_star"] = s.odd_star;
    r["other"] = s.other;
    r["interpretation"] = "negative-edge count identical under every parity labeling";
    Record skipped = Record::array();
    for (const auto& i : s.skipped) skipped.push_back({{"source", i.source}, {"message", i.message}});
    r["skipped"] = std::move(skipped);
    return r;
}

const std::vector<std::string>& rna_columns() {
    static const std::vector<std::string> c{"graph6", "n", "m", "sigma_minus", "sigma_plus", "spectrum",
                                            "witness", "method", "seed"};
    return c;
}
const std::vector<std::string>& spectrum_columns() {
    static const std::vector<std::string> c{"graph6", "n", "m", "spectrum", "min", "max", "singleton"};
    return c;
}
const std::vector<std::string>& signed_columns() {
    static const std::vector<std::string> c{"graph6", "n", "m", "labeling", "signs", "negative",
                                            "positive", "homogeneity", "balanced"};
    return c;
}
const std::vector<std::string>& realizable_columns() {
    static const std::vector<std::string> c{"graph6", "n", "m", "signs", "realizable", "labeling",
                                            "balanced"};
    return c;
}
const std::vector<std::string>& theorem_columns() {
    static const std::vector<std::string> c{"id", "status", "cases", "scope"};
    return c;
}
const std::vector<std::string>& conjecture_columns() {
    static const std::vector<std::string> c{"graph6", "n", "m", "spectrum", "singleton",
                                            "classification", "odd_star"};
    return c;
}
const std::vector<std::string>& graph_columns() {
    static const std::vector<std::string> c{"graph6", "n", "m"};
    return c;
}

ReportWriter::ReportWriter(std::ostream& out, Format format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {}

std::string ReportWriter::cell(const Record& record, const std::string& column) const {
    return record.contains(column) ? scalar_text(record.at(column)) : std::string();
}

void ReportWriter::write(const Record& record) {
    switch (format_) {
        case Format::JsonLines:
            out_ << record.dump() << '\n';
            break;
        case Format::Csv: {
            if (!header_written_) {
                for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
                out_ << '\n';
                header_written_ = true;
            }
            for (std::size_t i = 0; i < columns_.size(); ++i) {
                out_ << (i ? "," : "") << csv_escape(cell(record, columns_[i]));
            }
            out_ << '\n';
            break;
        }
        case Format::Table: {
            std::vector<std::string> row;
            for (const auto& c : columns_) row.push_back(cell(record, c));
            rows_.push_back(std::move(row));
            break;
        }
    }
}

void ReportWriter::write_trailer(const Record& record) {
    switch (format_) {
        case Format::JsonLines:
            out_ << record.dump() << '\n';
            break;
        case Format::Csv:
            if (!header_written_) {
                for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
                out_ << '\n';
                header_written_ = true;
            }
            out_ << "# " << record.dump() << '\n';
            break;
        case Format::Table:
            trailers_.push_back(record);
            break;
    }
}

void ReportWriter::finish() {
    if (format_ != Format::Table) {
        out_.flush();
        return;
    }
    std::vector<std::size_t> width(columns_.size());
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        width[i] = columns_[i].size();
        for (const auto& row : rows_) width[i] = std::max(width[i], row[i].size());
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out_ << row[i];
            if (i + 1 < row.size()) out_ << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out_ << '\n';
    };
    print_row(columns_);
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.emplace_back(w, '-');
    print_row(rule);
    for (const auto& row : rows_) print_row(row);
    for (const auto& t : trailers_) {
        out_ << '\n';
        for (const auto& [key, value] : t.items()) {
            out_ << key << ": " << scalar_text(value) << '\n';
        }
    }
    rows_.clear();
    trailers_.clear();
    out_.flush();
}

}  // namespace parsig
