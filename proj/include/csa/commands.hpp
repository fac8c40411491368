#pragma once

// The operations behind the command-line tool and the Python module, on JSON
// documents. Inputs that are absent are null.

#include <cstdint>
#include <string>
#include <vector>

#include "csa/documents.hpp"

namespace csa {

struct CommandInput {
    Json algebra;
    /// Infix strings, coefficient arrays or {"factors": [...]} documents.
    std::vector<Json> polys;
    Json minpoly;
    Json class_doc;
    std::vector<Json> matrices;
    Json override_doc;
    std::vector<std::string> places;
    long height = 3;
    long trials = 1000;
    std::uint64_t seed = 0;
    bool explain = false;
    bool allow_singular = false;
};

struct CommandResult {
    Json doc;
    /// A decision command answered no.
    bool negative = false;
};

/// factor, splitting, capacity, charpoly-check, embed-check, classes, rcf,
/// realizable, quat-charpoly, quat-invariants, quat-conjugate, quat-search,
/// division-classes.
const std::vector<std::string>& command_names();

/// InvalidArgument for an unknown name or missing input.
CommandResult run_command(const std::string& name, const CommandInput& in);

}  // namespace csa
