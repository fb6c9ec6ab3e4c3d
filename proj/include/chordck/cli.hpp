#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chordck/errors.hpp"

namespace chordck::cli {

// Exit codes. Verification semantics first, then BSD-style tool codes.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitCounterexamples = 1;
inline constexpr int kExitIncomplete = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitIoError = 74;

struct usage_error : error {
    using error::error;
};

// Raised when --help was requested; carries the help text.
struct help_requested {
    std::string text;
};

enum class Verb { Check, Verify, Generate, Gallery, Search };

struct Command {
    Verb verb = Verb::Check;
    std::string theorem_id;
    int order_lo = 0;
    int order_hi = 0;
    std::string g6_input;    // path or "-" for stdin; empty = unset
    std::string edges_input; // edge-list alternative for check
    std::vector<std::string> forbid;
    std::string require = "connected"; // any | connected | 2conn
    std::optional<int> max_degree;
    double budget_seconds = 0; // 0 = unlimited
    int threads = 0;           // 0 = auto (CHORDCK_THREADS, then hardware)
    bool json = false;
    bool skip_bad = false;
    std::string emit = "g6"; // generate output: g6 | json
    std::vector<std::string> props;
    std::string gallery_name;
};

// Parses argv (without the program name). Throws usage_error on invalid
// input and help_requested for --help.
Command parse_args(const std::vector<std::string>& args);

int execute(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace chordck::cli
