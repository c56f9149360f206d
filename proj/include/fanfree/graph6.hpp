#ifndef FANFREE_GRAPH6_HPP
#define FANFREE_GRAPH6_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fanfree/graph.hpp"

namespace fanfree {

/// Serializes to graph6: the order prefix (one byte for n <= 62, '~' plus
/// three bytes for 63 <= n <= 258047) followed by the upper-triangle
/// adjacency bits in column-major order, packed into 6-bit groups offset
/// by 63. No trailing newline.
std::string to_graph6(const Graph& g);

/// Parses one graph6 value. Rejects, with the byte offset of the fault:
/// bytes outside [63,126], truncated or overlong payloads, and nonzero
/// padding bits. Surrounding whitespace is not tolerated.
Graph from_graph6(std::string_view text);

/// Splits newline-delimited graph6 text, skipping blank lines and optional
/// trailing '\r', and parses each line. Byte offsets in errors are
/// line-local; the failing line number (1-based) is prefixed to the message.
std::vector<Graph> parse_graph6_lines(std::string_view text);

} // namespace fanfree

#endif
