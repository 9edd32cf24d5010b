#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aibomkit/document.hpp"

namespace aibomkit {

/// Environment variable naming a directory of `<id>.json` rulesets that
/// replaces the bundled set.
inline constexpr const char* kFrameworkDirEnv = "AIBOMKIT_FRAMEWORK_DIR";

/// One regulatory requirement and the document paths that evidence it.
///
/// Selectors in `mapped_paths`:
///   `name`, `ai_domain`, ...        a property anywhere in the document (prefix optional)
///   `relationship:<type>`           at least one relationship of that type
///   `profile:ai`, `profile:dataset` at least one package of that class
///   `Agent.<field>`                 the property on a Person/Organization/Tool node
///   `Organization.<field>`          ... restricted to one agent kind
struct Requirement {
    std::string id;
    std::string citation;
    std::string description;
    std::vector<std::string> mapped_paths;
    bool mappable = true;
    /// Why a requirement cannot be mapped, or how to approximate it.
    std::string rationale;

    friend bool operator==(const Requirement&, const Requirement&) = default;
};

struct Framework {
    std::string id;
    std::string name;
    std::vector<Requirement> requirements;

    friend bool operator==(const Framework&, const Framework&) = default;
};

/// Parses a ruleset. Throws Error on a malformed file, a duplicate requirement
/// id, or a non-mappable requirement carrying paths.
Framework framework_from_json(const nlohmann::json& j);
nlohmann::json framework_to_json(const Framework& fw);

/// Ids of the frameworks available to load_framework, sorted.
std::vector<std::string> framework_ids();
/// Throws UnknownFramework.
Framework load_framework(std::string_view id);

/// True if the selector names a modelled field, pass-through field, relationship type or profile.
bool is_valid_selector(std::string_view selector);

enum class CoverageStatus { satisfied, partial, missing, not_mappable };

std::string_view to_string(CoverageStatus s) noexcept;

struct Evidence {
    std::optional<std::string> element_id;
    std::string path;

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct CoverageEntry {
    std::string requirement_id;
    std::string citation;
    std::string description;
    CoverageStatus status = CoverageStatus::missing;
    std::vector<Evidence> evidence;
    /// Mapped selectors with no evidence.
    std::vector<std::string> missing_paths;
    std::string rationale;

    friend bool operator==(const CoverageEntry&, const CoverageEntry&) = default;
};

struct CoverageCounts {
    std::size_t satisfied = 0;
    std::size_t partial = 0;
    std::size_t missing = 0;
    std::size_t not_mappable = 0;

    std::size_t total() const noexcept { return satisfied + partial + missing + not_mappable; }
    std::size_t mappable() const noexcept { return satisfied + partial + missing; }
};

struct CoverageReport {
    std::string framework_id;
    std::string framework_name;
    std::vector<CoverageEntry> entries;

    CoverageCounts counts() const noexcept;

    friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

/// Evidence for one selector, searched document-wide.
std::vector<Evidence> find_evidence(const SpdxDocument& doc, std::string_view selector);

CoverageReport assess(const SpdxDocument& doc, const Framework& fw);

enum class ReportFormat { text, json, markdown };

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept;
nlohmann::json report_to_json(const CoverageReport& report);
std::string render_report(const CoverageReport& report, ReportFormat format);

}  // namespace aibomkit
