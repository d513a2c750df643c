#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace olymp::cli {

/// Input or invocation problem: reported on stderr with exit code 2,
/// distinct from claim failures which exit with 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One verifiable statement a command checked, with the numbers behind it.
struct Claim {
    std::string name;
    bool pass = false;
    nlohmann::json detail;
};

struct RunReport {
    std::string command;
    std::uint64_t seed = 0;
    bool seeded = false;  // seed field emitted only for randomized commands
    std::vector<Claim> claims;
    nlohmann::json output;  // command-specific payload
    double runtime_ms = 0.0;

    void add(const std::string& name, bool pass, nlohmann::json detail = nlohmann::json::object());

    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }

    /// Claims ordered by name; object keys ordered by the JSON library.
    nlohmann::json to_json() const;

    /// One line per claim plus a verdict, for human eyes (stderr).
    std::string summary() const;
};

/// Recursively removes every "runtime_ms" member, the only nondeterministic
/// field reports contain.  Used for run-to-run comparisons.
nlohmann::json strip_timing(nlohmann::json doc);

}  // namespace olymp::cli
