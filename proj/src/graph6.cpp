#include "fanfree/graph6.hpp"

#include <cstddef>

namespace fanfree {

namespace {

constexpr int kBias = 63;
constexpr long kMaxOrder = 258047; // largest order the 4-byte prefix can carry

int payload_byte(std::string_view text, std::size_t at) {
    if (at >= text.size())
        throw FormatError("graph6 value truncated: expected " + std::to_string(at + 1) +
                              " bytes, got " + std::to_string(text.size()),
                          text.size());
    const unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126)
        throw FormatError("byte outside the graph6 alphabet (63..126): " + std::to_string(int{c}), at);
    return int{c} - kBias;
}

} // namespace

std::string to_graph6(const Graph& g) {
    const long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw FormatError("empty graph6 value", 0);

    std::size_t pos = 0;
    long n;
    if (text[0] == '~') {
        // '~~' would begin the 8-byte order prefix for n > 258047, beyond the vertex cap anyway.
        if (text.size() >= 2 && text[1] == '~')
            throw FormatError("graph6 orders above " + std::to_string(kMaxOrder) + " are not supported", 1);
        pos = 1;
        const long a = payload_byte(text, pos++);
        const long b = payload_byte(text, pos++);
        const long c = payload_byte(text, pos++);
        n = (a << 12) | (b << 6) | c;
        if (n <= 62)
            throw FormatError("overlong order prefix: n=" + std::to_string(n) +
                                  " must use the single-byte form",
                              1);
    } else {
        n = payload_byte(text, pos++);
    }
    if (n > Graph::kMaxVertices)
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds the vertex cap of " +
                            std::to_string(Graph::kMaxVertices));

    const long nbits = n * (n - 1) / 2;
    const std::size_t want = pos + static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() > want)
        throw FormatError("trailing bytes after graph6 payload", want);

    GraphBuilder builder(static_cast<int>(n));
    long bit = 0;
    int acc = 0, avail = 0;
    std::size_t group_at = pos;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (avail == 0) {
                group_at = pos;
                acc = payload_byte(text, pos++);
                avail = 6;
            }
            if ((acc >> (avail - 1)) & 1) builder.toggle_unchecked(row, col);
            --avail;
        }
    }
    if (avail > 0 && (acc & ((1 << avail) - 1)) != 0)
        throw FormatError("nonzero padding bits in final graph6 byte", group_at);
    (void)bit;
    return builder.build();
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    long line_no = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        const bool last = end == std::string_view::npos;
        std::string_view line = text.substr(start, last ? text.size() - start : end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            try {
                out.push_back(from_graph6(line));
            } catch (const FormatError& e) {
                throw FormatError(FormatError::Preformatted{},
                                  "line " + std::to_string(line_no) + ": " + e.what(), e.byte_offset);
            }
        }
        if (last) break;
        start = end + 1;
    }
    return out;
}

} // namespace fanfree
