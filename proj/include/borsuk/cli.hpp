#ifndef BORSUK_CLI_HPP
#define BORSUK_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace borsuk::cli {

struct CapacityCommand {
    std::string expr;
};

struct DominatedCommand {
    std::string expr;
};

struct HomologyCommand {
    std::string expr;
    std::optional<int> max_dim;  // defaulted per family when absent
};

struct GroupCommand {
    std::string literal;
};

struct OracleVerifyCommand {
    int max_order = 64;
};

using Command = std::variant<CapacityCommand, DominatedCommand, HomologyCommand, GroupCommand,
                             OracleVerifyCommand>;

struct Options {
    bool json = false;
};

/// Execute a command, writing results to `out` and diagnostics to `err`.
/// Exit codes: 0 success, 1 oracle mismatch, 2 parse or descriptor errors,
/// 3 unsupported queries (no homology table, count-only enumeration, order
/// above the oracle bound).
int run(const Command& command, const Options& options, std::ostream& out, std::ostream& err);

}  // namespace borsuk::cli

#endif  // BORSUK_CLI_HPP
