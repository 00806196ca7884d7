#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "parsig/graph.hpp"

namespace parsig {

inline constexpr int kMaxGraph6Order = 62;

/// Decodes one graph6 record (single-byte size form, n <= 62). A leading
/// ">>graph6<<" header and trailing whitespace are accepted.
///
/// Throws UnsupportedSizeError for the multi-byte size forms and
/// MalformedRecordError for bytes outside [63,126], wrong length or
/// nonzero padding.
Graph parse_graph6(std::string_view text);

/// Encodes g. Throws UnsupportedSizeError when g.order() > 62.
std::string write_graph6(const Graph& g);

struct Graph6Line {
    int line_number = 0;
    std::string text;
};

/// Splits a stream into graph6 records, one per line. Blank lines are
/// skipped and ">>graph6<<" headers are stripped; nothing is decoded here.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

}  // namespace parsig
