#pragma once

#include <string>
#include <string_view>

#include "chordck/graph.hpp"

namespace chordck {

// Decode one graph6 record (short form, order <= 62). Malformed input throws
// parse_error carrying the byte offset.
Graph parse_graph6(std::string_view text);

// Encode in short form. Orders above 62 are not representable here.
std::string to_graph6(const Graph& g);

// Plain text edge list: first line "n", then one "u v" pair per line,
// whitespace separated, 0-indexed.
Graph parse_edge_list_text(std::string_view text);
std::string format_edge_list(const Graph& g);

} // namespace chordck
