#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chordck {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An edge endpoint is negative or >= the graph order.
struct invalid_vertex_error : error {
    using error::error;
};

// A self-loop or otherwise malformed edge.
struct invalid_edge_error : error {
    using error::error;
};

// A parameter outside its documented range (cycle length, pattern size, ...).
struct invalid_parameter_error : error {
    using error::error;
};

// A requested order does not fit in one machine word of adjacency bits.
struct capacity_error : error {
    using error::error;
};

// Malformed graph6 or edge-list text. `offset` is the byte within the record
// (or the line number for line-oriented input) where decoding failed.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t offset_)
        : error(what + " (at byte " + std::to_string(offset_) + ")"), offset(offset_) {}
    std::size_t offset;
};

// Generation was refused because the request is not safely prunable.
struct generation_refused_error : error {
    using error::error;
};

// An exhaustive-required verification ran out of budget.
struct incomplete_verification_error : error {
    using error::error;
};

} // namespace chordck
