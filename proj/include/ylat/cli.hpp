#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ylat::cli {

/// Limits shared by the subcommands. The poset cap is overridable through
/// the environment variable TY_MAX_POSET.
struct Config {
    long long max_poset = 0;     // filled from the environment or the default
    long long max_sperner = 2000;
};

/// Run one subcommand. JSON (or DOT) goes to out, diagnostics to err.
/// Returns 0 on success, 1 on verification failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace ylat::cli
