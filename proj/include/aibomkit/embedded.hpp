#pragma once

#include <span>
#include <string_view>

namespace aibomkit::detail {

struct EmbeddedFile {
    std::string_view name;
    std::string_view content;
};

/// Bundled framework rulesets (data/frameworks/*.json).
std::span<const EmbeddedFile> embedded_frameworks() noexcept;
/// Bundled fixture corpus (fixtures/**/*.json).
std::span<const EmbeddedFile> embedded_fixtures() noexcept;

}  // namespace aibomkit::detail
