#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clab::cli
{
    enum ExitCode : int
    {
        ok = 0,
        refuted = 1,
        inconclusive = 2,
        input_error = 3
    };

    /// Runs one clab invocation. args excludes the program name. Machine
    /// output (a single JSON document, or the requested DOT/JSON file body)
    /// goes to out; human-readable summaries go to err.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
