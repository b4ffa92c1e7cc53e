#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line surface.  run() parses args (program name excluded), executes
// one subcommand and writes a deterministic JSON document to out.  Exit
// codes: 0 success, 1 validation failure (details as JSON on err), 2 schema
// or parse error (details as JSON on err).

namespace isokit::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace isokit::cli
