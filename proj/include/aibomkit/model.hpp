#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "aibomkit/error.hpp"

namespace aibomkit {

// ---------------------------------------------------------------------------
// Enumerations. Each enum's underlying value indexes its token table, so the
// declaration order below must match EnumTraits<E>::tokens exactly.

enum class Presence { yes, no, no_assertion };

enum class SoftwarePurpose {
    application, archive, bom, configuration, container, data, device, device_driver,
    disk_image, documentation, evidence, executable, file, filesystem_image, firmware,
    framework, install, library, manifest, model, module, operating_system, other, patch,
    platform, requirement, source, specification, test
};

enum class DatasetType {
    audio, categorical, graph, image, no_assertion, numeric, other, sensor, structured,
    syntactic, text, timeseries, timestamp, video
};

enum class EnergyUnit { kilowatt_hour, megajoule, other };

enum class SafetyRisk { serious, high, medium, low };

enum class ConfidentialityLevel { red, amber, green, clear };

enum class DatasetAvailability { clickthrough, direct_download, query, registration, scraping_script };

enum class RelationshipType {
    contains, describes, has_concluded_license, has_declared_license, has_documentation,
    tested_on, trained_on, other
};

enum class AgentKind { person, organization, tool };

template <class E>
struct EnumTraits;

template <>
struct EnumTraits<Presence> {
    static constexpr std::string_view name = "PresenceType";
    static constexpr std::array<std::string_view, 3> tokens{"yes", "no", "noAssertion"};
};

template <>
struct EnumTraits<SoftwarePurpose> {
    static constexpr std::string_view name = "SoftwarePurpose";
    static constexpr std::array<std::string_view, 29> tokens{
        "application", "archive", "bom", "configuration", "container", "data", "device",
        "deviceDriver", "diskImage", "documentation", "evidence", "executable", "file",
        "filesystemImage", "firmware", "framework", "install", "library", "manifest", "model",
        "module", "operatingSystem", "other", "patch", "platform", "requirement", "source",
        "specification", "test"};
};

template <>
struct EnumTraits<DatasetType> {
    static constexpr std::string_view name = "DatasetType";
    static constexpr std::array<std::string_view, 14> tokens{
        "audio", "categorical", "graph", "image", "noAssertion", "numeric", "other",
        "sensor", "structured", "syntactic", "text", "timeseries", "timestamp", "video"};
};

template <>
struct EnumTraits<EnergyUnit> {
    static constexpr std::string_view name = "EnergyUnitType";
    static constexpr std::array<std::string_view, 3> tokens{"kilowattHour", "megajoule", "other"};
};

template <>
struct EnumTraits<SafetyRisk> {
    static constexpr std::string_view name = "SafetyRiskAssessmentType";
    static constexpr std::array<std::string_view, 4> tokens{"serious", "high", "medium", "low"};
};

template <>
struct EnumTraits<ConfidentialityLevel> {
    static constexpr std::string_view name = "ConfidentialityLevelType";
    static constexpr std::array<std::string_view, 4> tokens{"red", "amber", "green", "clear"};
};

template <>
struct EnumTraits<DatasetAvailability> {
    static constexpr std::string_view name = "DatasetAvailabilityType";
    static constexpr std::array<std::string_view, 5> tokens{
        "clickthrough", "directDownload", "query", "registration", "scrapingScript"};
};

template <>
struct EnumTraits<RelationshipType> {
    static constexpr std::string_view name = "RelationshipType";
    static constexpr std::array<std::string_view, 8> tokens{
        "contains", "describes", "hasConcludedLicense", "hasDeclaredLicense",
        "hasDocumentation", "testedOn", "trainedOn", "other"};
};

template <>
struct EnumTraits<AgentKind> {
    static constexpr std::string_view name = "AgentType";
    static constexpr std::array<std::string_view, 3> tokens{"Person", "Organization", "Tool"};
};

/// Exact, case-sensitive token lookup. Throws UnknownToken.
template <class E>
E parse_enum(std::string_view token) {
    const auto& tokens = EnumTraits<E>::tokens;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == token) return static_cast<E>(i);
    }
    throw UnknownToken(std::string(EnumTraits<E>::name), std::string(token));
}

template <class E>
std::optional<E> try_parse_enum(std::string_view token) noexcept {
    const auto& tokens = EnumTraits<E>::tokens;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == token) return static_cast<E>(i);
    }
    return std::nullopt;
}

template <class E>
constexpr std::string_view to_token(E value) noexcept {
    return EnumTraits<E>::tokens[static_cast<std::size_t>(value)];
}

/// Runtime handle on the enumerations, for callers that only know the kind by name.
enum class EnumKind {
    presence, software_purpose, dataset_type, energy_unit, safety_risk,
    confidentiality_level, dataset_availability, relationship_type
};

std::span<const std::string_view> enum_tokens(EnumKind kind) noexcept;
std::string_view enum_kind_name(EnumKind kind) noexcept;
std::optional<EnumKind> enum_kind_from_name(std::string_view name) noexcept;
/// Returns the canonical token. Throws UnknownToken.
std::string_view parse_enum(std::string_view token, EnumKind kind);

// ---------------------------------------------------------------------------
// Scalar formats

/// UTC instant with second resolution; text form is exactly YYYY-MM-DDThh:mm:ssZ.
class Timestamp {
public:
    explicit Timestamp(std::chrono::sys_seconds instant) noexcept : instant_(instant) {}

    static Timestamp parse(std::string_view text);
    static std::optional<Timestamp> try_parse(std::string_view text) noexcept;

    std::chrono::sys_seconds instant() const noexcept { return instant_; }
    std::string to_string() const;

    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;

private:
    std::chrono::sys_seconds instant_;
};

inline Timestamp parse_timestamp(std::string_view text) { return Timestamp::parse(text); }
inline std::string format_timestamp(const Timestamp& t) { return t.to_string(); }

/// Absolute IRI check: scheme, ':', non-empty remainder, no embedded whitespace.
/// Returns the input with surrounding whitespace trimmed. Throws BadIri.
std::string validate_iri(std::string_view text);
bool is_valid_iri(std::string_view text) noexcept;

/// xsd:decimal kept with its original lexical form so it re-serializes verbatim.
class Decimal {
public:
    static Decimal parse(std::string_view text);
    static std::optional<Decimal> try_parse(std::string_view text) noexcept;

    const std::string& lexical() const noexcept { return lexical_; }
    double value() const noexcept { return value_; }

    friend bool operator==(const Decimal& a, const Decimal& b) noexcept {
        return a.lexical_ == b.lexical_;
    }

private:
    Decimal(std::string lexical, double value) : lexical_(std::move(lexical)), value_(value) {}

    std::string lexical_;
    double value_ = 0.0;
};

// ---------------------------------------------------------------------------
// License targets

inline constexpr std::string_view kListedLicensePrefix = "https://spdx.org/licenses/";

enum class LicenseTargetKind { listed, none, no_assertion, expression };

/// A license relationship target. Expressions are opaque; no grammar is applied.
struct LicenseTarget {
    LicenseTargetKind kind = LicenseTargetKind::expression;
    std::string value;

    static LicenseTarget classify(std::string_view text);

    friend bool operator==(const LicenseTarget&, const LicenseTarget&) = default;
};

// ---------------------------------------------------------------------------
// Elements and their parts

/// Properties the reader did not recognize, or recognized but could not type.
/// Keys are sorted, which makes write-out deterministic.
using Extras = std::map<std::string, nlohmann::json>;

struct Agent {
    AgentKind kind = AgentKind::organization;
    std::optional<std::string> spdx_id;
    std::string name;
    std::vector<std::string> external_identifiers;
    Extras extras;

    /// A bare spdxId pointing at an Agent defined elsewhere.
    bool is_reference() const noexcept { return name.empty() && spdx_id.has_value(); }

    friend bool operator==(const Agent&, const Agent&) = default;
};

struct CreationInfo {
    std::optional<Timestamp> created;
    std::vector<Agent> created_by;
    Extras extras;

    friend bool operator==(const CreationInfo&, const CreationInfo&) = default;
};

struct DictionaryEntry {
    std::string key;
    std::string value;
    Extras extras;

    friend bool operator==(const DictionaryEntry&, const DictionaryEntry&) = default;
};

struct EnergyConsumptionDescription {
    std::optional<Decimal> energy_quantity;
    std::optional<EnergyUnit> energy_unit;
    std::optional<std::string> comment;
    Extras extras;

    friend bool operator==(const EnergyConsumptionDescription&,
                           const EnergyConsumptionDescription&) = default;
};

struct EnergyConsumption {
    std::vector<EnergyConsumptionDescription> training;
    std::vector<EnergyConsumptionDescription> finetuning;
    std::vector<EnergyConsumptionDescription> inference;
    Extras extras;

    friend bool operator==(const EnergyConsumption&, const EnergyConsumption&) = default;
};

/// Core and Software fields shared by AI and dataset packages. Empty text means absent.
struct PackageCore {
    std::optional<std::string> spdx_id;
    std::string name;
    std::string package_version;
    std::optional<Timestamp> build_time;
    std::optional<Timestamp> release_time;
    std::optional<Timestamp> valid_until_time;
    std::vector<std::string> download_location;
    std::optional<SoftwarePurpose> primary_purpose;
    std::vector<Agent> supplied_by;
    std::vector<Agent> originated_by;
    std::optional<std::string> support_level;
    std::optional<std::string> standard_name;
    std::optional<std::string> comment;
    std::optional<std::string> description;
    Extras extras;

    friend bool operator==(const PackageCore&, const PackageCore&) = default;
};

struct AIPackage {
    PackageCore core;
    std::optional<Presence> autonomy_type;
    std::optional<std::string> domain;
    std::optional<EnergyConsumption> energy_consumption;
    std::vector<DictionaryEntry> hyperparameter;
    std::optional<std::string> information_about_training;
    std::optional<std::string> information_about_application;
    std::optional<std::string> limitation;
    std::vector<DictionaryEntry> metric;
    std::vector<DictionaryEntry> metric_decision_threshold;
    std::vector<std::string> model_data_preprocessing;
    std::vector<std::string> model_explainability;
    std::optional<SafetyRisk> safety_risk_assessment;
    std::vector<std::string> standard_compliance;
    std::vector<std::string> type_of_model;
    std::optional<Presence> use_sensitive_personal_information;

    friend bool operator==(const AIPackage&, const AIPackage&) = default;
};

struct DatasetPackage {
    PackageCore core;
    std::vector<DatasetType> dataset_type;
    std::optional<std::string> anonymization_method_used;
    std::optional<ConfidentialityLevel> confidentiality_level;
    std::optional<std::string> data_collection_process;
    std::optional<std::string> data_preprocessing;
    std::optional<DatasetAvailability> dataset_availability;
    std::optional<std::string> dataset_noise;
    std::optional<std::uint64_t> dataset_size;
    std::optional<std::string> dataset_update_mechanism;
    std::optional<Presence> has_sensitive_personal_information;
    std::optional<std::string> intended_use;
    std::optional<std::string> known_bias;
    std::vector<DictionaryEntry> sensor;

    friend bool operator==(const DatasetPackage&, const DatasetPackage&) = default;
};

struct FileArtifact {
    std::optional<std::string> spdx_id;
    std::string name;
    std::optional<std::string> content_type;
    std::optional<SoftwarePurpose> primary_purpose;
    Extras extras;

    friend bool operator==(const FileArtifact&, const FileArtifact&) = default;
};

/// A license node in the graph, e.g. a LicenseExpression with its own spdxId.
struct LicenseElement {
    std::optional<std::string> spdx_id;
    std::string expression;
    Extras extras;

    friend bool operator==(const LicenseElement&, const LicenseElement&) = default;
};

/// Any node of a type outside the AI and Dataset profiles, kept verbatim.
struct GenericElement {
    std::string type_tag;
    std::optional<std::string> spdx_id;
    Extras properties;

    friend bool operator==(const GenericElement&, const GenericElement&) = default;
};

using Element =
    std::variant<AIPackage, DatasetPackage, FileArtifact, Agent, LicenseElement, GenericElement>;

const std::optional<std::string>& element_id(const Element& e) noexcept;
std::string_view element_kind(const Element& e) noexcept;
std::string_view element_name(const Element& e) noexcept;

struct Relationship {
    std::optional<std::string> spdx_id;
    RelationshipType type = RelationshipType::other;
    std::string from;
    std::vector<std::string> to;
    std::optional<std::string> description;
    Extras extras;

    bool is_license() const noexcept {
        return type == RelationshipType::has_concluded_license ||
               type == RelationshipType::has_declared_license;
    }

    friend bool operator==(const Relationship&, const Relationship&) = default;
};

// ---------------------------------------------------------------------------
// Diagnostics (shared by the reader and the validator)

enum class Severity { error, warning, info };

std::string_view to_string(Severity s) noexcept;

struct Diagnostic {
    std::string rule_id;
    Severity severity = Severity::error;
    std::optional<std::string> element_id;
    std::string path;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

}  // namespace aibomkit
