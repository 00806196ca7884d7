#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "parsig/rna.hpp"
#include "parsig/signs.hpp"
#include "parsig/verifier.hpp"

namespace parsig {

using Record = nlohmann::ordered_json;

enum class Format { JsonLines, Csv, Table };
Format parse_format(std::string_view text);

// Record builders. Every record leads with the graph6 of its subject.
Record rna_record(const Graph& g, const RnaResult& result, const std::optional<SpectrumReport>& spectrum,
                  std::optional<std::uint64_t> seed);
Record spectrum_record(const Graph& g, const SpectrumReport& spectrum);
Record signed_record(const SignedGraph& s, const std::optional<Labeling>& labeling);
Record realizable_record(const SignedGraph& s, const std::optional<Labeling>& labeling);
Record theorem_record(const TheoremCheck& check);
Record conjecture_record(const ConjectureRecord& r);
Record summary_record(const ScanSummary& summary);

/// Column sets for CSV and table output, one per record kind.
const std::vector<std::string>& rna_columns();
const std::vector<std::string>& spectrum_columns();
const std::vector<std::string>& signed_columns();
const std::vector<std::string>& realizable_columns();
const std::vector<std::string>& theorem_columns();
const std::vector<std::string>& conjecture_columns();
const std::vector<std::string>& graph_columns();

/// Streams records as json-lines, CSV (fixed header, arrays joined by ';')
/// or an aligned table. Tables are buffered until finish().
class ReportWriter {
public:
    ReportWriter(std::ostream& out, Format format, std::vector<std::string> columns);

    void write(const Record& record);
    /// Summary line after the records: a json line, a '#'-prefixed CSV
    /// comment, or a block under the table.
    void write_trailer(const Record& record);
    void finish();

private:
    std::string cell(const Record& record, const std::string& column) const;

    std::ostream& out_;
    Format format_;
    std::vector<std::string> columns_;
    bool header_written_ = false;
    std::vector<std::vector<std::string>> rows_;
    std::vector<Record> trailers_;
};

}  // namespace parsig
