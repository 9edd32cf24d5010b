#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aibomkit/document.hpp"

namespace aibomkit {

/// One entry of the bundled corpus index.
struct FixtureEntry {
    std::string name;
    std::string file;
    /// Field-level snippet rather than a whole document.
    bool snippet = false;
    /// Expected outcome: conformant (no diagnostics at all), or exactly these
    /// rule ids in validation order.
    bool conformant = false;
    std::vector<std::string> rule_ids;
    /// Values invented to complete the document; not asserted anywhere.
    std::vector<std::string> placeholders;
};

std::vector<FixtureEntry> fixture_index();
std::vector<std::string> fixture_names();

/// Raw file contents. Throws UnknownFixture.
std::string_view fixture_bytes(std::string_view name);
/// Parsed fixture. Throws UnknownFixture.
SpdxDocument load_fixture(std::string_view name);

}  // namespace aibomkit
