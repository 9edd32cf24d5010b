#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "aibomkit/document.hpp"

namespace aibomkit {

/// Process exit codes of the command-line tool.
enum ExitStatus : int {
    kExitOk = 0,
    /// Non-conformant document, coverage below the threshold, or unknown element id.
    kExitFindings = 1,
    /// Usage, I/O or parse error.
    kExitError = 2,
};

/// Template document with every mandatory field of the given profile ("ai" or
/// "dataset") filled with placeholders, plus both license relationships pointing
/// at NoAssertionLicense. Throws Error for another kind.
SpdxDocument scaffold_document(std::string_view kind);

/// Runs `aibomkit <args...>`; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aibomkit
