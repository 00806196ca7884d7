#include "parsig/graph6.hpp"

#include <string>

#include "parsig/errors.hpp"

namespace parsig {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                          s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

std::string_view strip_header(std::string_view s) {
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    return s;
}

std::size_t body_length(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    const std::string_view rec = trim(strip_header(trim(text)));
    if (rec.empty()) throw MalformedRecordError("empty graph6 record");

    for (std::size_t i = 0; i < rec.size(); ++i) {
        const auto c = static_cast<unsigned char>(rec[i]);
        if (c < 63 || c > 126) {
            throw MalformedRecordError("graph6 byte " + std::to_string(static_cast<int>(c)) +
                                       " at offset " + std::to_string(i) +
                                       " outside [63,126] in '" + std::string(rec) + "'");
        }
    }
    if (rec[0] == 126) {
        throw UnsupportedSizeError("graph6 record '" + std::string(rec) +
                                   "' uses the multi-byte size form (n >= 63); only n <= 62 "
                                   "is supported");
    }

    const int n = rec[0] - 63;
    const std::string_view body = rec.substr(1);
    if (body.size() != body_length(n)) {
        throw MalformedRecordError("graph6 record '" + std::string(rec) + "' has " +
                                   std::to_string(body.size()) + " body bytes, expected " +
                                   std::to_string(body_length(n)) + " for n=" +
                                   std::to_string(n));
    }

    Graph g(n);
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++k) {
            const int group = body[k / 6] - 63;
            if ((group >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(u, v);
        }
    }
    for (; k < body.size() * 6; ++k) {
        const int group = body[k / 6] - 63;
        if ((group >> (5 - static_cast<int>(k % 6))) & 1) {
            throw MalformedRecordError("graph6 record '" + std::string(rec) +
                                       "' has nonzero padding bits");
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Order) {
        throw UnsupportedSizeError("graph6 writer supports n <= 62, got n=" + std::to_string(n));
    }
    std::string out(1 + body_length(n), static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++k) {
            if (g.has_edge(u, v)) {
                out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
            }
        }
    }
    return out;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
    std::vector<Graph6Line> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string_view rec = trim(strip_header(trim(line)));
        if (rec.empty()) continue;
        out.push_back({number, std::string(rec)});
    }
    return out;
}

}  // namespace parsig
