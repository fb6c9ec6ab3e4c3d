#include "chordck/graph6.hpp"

#include <sstream>

namespace chordck {

// graph6 short form: byte (n + 63), then the upper triangle of the adjacency
// matrix as bits x(0,1) x(0,2) x(1,2) x(0,3) ... packed into 6-bit groups,
// each stored as (value + 63). Unused bits in the final group must be zero.

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 record", 0);
    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126)
        throw parse_error("graph6 long form not supported (order > 62)", 0);
    if (head < 63 || head > 125)
        throw parse_error("graph6 header byte out of range", 0);
    const int n = head - 63;
    const int bits = n * (n - 1) / 2;
    const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != 1 + groups)
        throw parse_error("graph6 record length " + std::to_string(text.size()) +
                              ", expected " + std::to_string(1 + groups),
                          text.size() < 1 + groups ? text.size() : 1 + groups);

    Graph g(n);
    int u = 0, v = 1;
    for (std::size_t k = 0; k < groups; ++k) {
        const unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126)
            throw parse_error("graph6 data byte out of range", 1 + k);
        const int value = c - 63;
        for (int b = 5; b >= 0; --b) {
            const int bit = (value >> b) & 1;
            if (v >= n) {
                if (bit) throw parse_error("nonzero padding bit", 1 + k);
                continue;
            }
            if (bit) g.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw capacity_error("graph6 short form limited to order 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int value = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1;
    if (!(in >> n) || n < 0)
        throw parse_error("edge list must start with a vertex count", 0);
    if (n > kCapacity)
        throw capacity_error("edge list order " + std::to_string(n) + " exceeds capacity");
    Graph g(static_cast<int>(n));
    long long u, v;
    while (in >> u) {
        if (!(in >> v))
            throw parse_error("dangling edge endpoint", static_cast<std::size_t>(in.tellg()));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_vertex_error("edge endpoint outside 0.." + std::to_string(n - 1));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace chordck
