#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aibomkit/document.hpp"
#include "aibomkit/model.hpp"

namespace aibomkit {

/// One entry of the static rule catalog.
struct Rule {
    std::string_view id;
    Severity severity;
    /// Element class the rule applies to ("AIPackage", "Relationship", ...).
    std::string_view target;
    /// Serialized property the rule is about, or "relationship:<type>"; empty for
    /// rules that are not about a single property.
    std::string_view field;
    std::string_view summary;
    /// Normative source of the rule; empty for plumbing rules.
    std::string_view citation;
};

std::span<const Rule> rule_catalog() noexcept;
const Rule* find_rule(std::string_view id) noexcept;

/// Which profiles a document is checked against. Packages of a class whose
/// profile is not selected are still checked, with errors downgraded to warnings.
struct ProfileSet {
    bool ai = true;
    bool dataset = true;

    static ProfileSet from_tokens(std::span<const std::string> tokens);
    /// Profiles declared by the document's profileConformance; both when none are.
    static ProfileSet from_document(const SpdxDocument& doc);

    friend bool operator==(const ProfileSet&, const ProfileSet&) = default;
};

/// Runs every applicable rule. Result is ordered by (document node, elements in
/// document order, relationships in document order), then rule id. Empty means conformant.
std::vector<Diagnostic> validate_document(const SpdxDocument& doc, ProfileSet profiles = {});

std::vector<Diagnostic> check_mandatory_fields(const AIPackage& pkg);
std::vector<Diagnostic> check_mandatory_fields(const DatasetPackage& pkg);

/// Exactly one hasConcludedLicense and one hasDeclaredLicense from `package_id`.
/// Returns nothing when `package_id` is not an AI or dataset package.
std::vector<Diagnostic> check_license_relationships(const SpdxDocument& doc,
                                                    std::string_view package_id);

/// Every energy consumption description needs both a quantity and a unit.
std::vector<Diagnostic> check_conditional_energy(const AIPackage& pkg);

/// Checks confined to the values an element carries: enum membership,
/// timestamp and IRI formats, cardinality upper bounds, unknown properties.
/// Presence of mandatory fields is not checked here.
std::vector<Diagnostic> check_field_values(const Element& element);

enum class Verdict { conformant, conformant_with_notes, non_conformant };

Verdict verdict(std::span<const Diagnostic> diagnostics) noexcept;
std::string_view to_string(Verdict v) noexcept;

/// JSON array of {ruleId, severity, elementId, path, message, paperCitation}.
nlohmann::json diagnostics_to_json(std::span<const Diagnostic> diagnostics);
std::string render_diagnostics_text(std::span<const Diagnostic> diagnostics);

}  // namespace aibomkit
