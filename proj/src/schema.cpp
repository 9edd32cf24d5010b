#include "aibomkit/schema.hpp"

#include <algorithm>
#include <array>

namespace aibomkit {

namespace {

using VK = ValueKind;
using EK = EnumKind;

constexpr std::array kDocumentFields{
    FieldInfo{"spdxId", VK::iri, true},
    FieldInfo{"name", VK::text, true},
    FieldInfo{"creationInfo", VK::creation_info, true},
    FieldInfo{"profileConformance", VK::text_list, false},
    FieldInfo{"rootElement", VK::iri_list, false},
};

constexpr std::array kCreationInfoFields{
    FieldInfo{"created", VK::timestamp, true},
    FieldInfo{"createdBy", VK::agent_list, false},
};

#define AIBOMKIT_PACKAGE_CORE_FIELDS                                              \
    FieldInfo{"spdxId", VK::iri, true},                                           \
    FieldInfo{"name", VK::text, true},                                            \
    FieldInfo{"packageVersion", VK::text, true},                                  \
    FieldInfo{"buildTime", VK::timestamp, true},                                  \
    FieldInfo{"releaseTime", VK::timestamp, true},                                \
    FieldInfo{"validUntilTime", VK::timestamp, true},                             \
    FieldInfo{"downloadLocation", VK::iri_list, false},                           \
    FieldInfo{"primaryPurpose", VK::enumeration, true, EK::software_purpose},     \
    FieldInfo{"suppliedBy", VK::agent_list, false},                               \
    FieldInfo{"originatedBy", VK::agent_list, false},                             \
    FieldInfo{"supportLevel", VK::text, true},                                    \
    FieldInfo{"standardName", VK::text, true},                                    \
    FieldInfo{"comment", VK::text, true},                                         \
    FieldInfo{"description", VK::text, true}

constexpr std::array kAiPackageFields{
    AIBOMKIT_PACKAGE_CORE_FIELDS,
    FieldInfo{"ai_autonomyType", VK::enumeration, true, EK::presence},
    FieldInfo{"ai_domain", VK::text, true},
    FieldInfo{"ai_energyConsumption", VK::energy_consumption, true},
    FieldInfo{"ai_hyperparameter", VK::dictionary_list, false},
    FieldInfo{"ai_informationAboutTraining", VK::text, true},
    FieldInfo{"ai_informationAboutApplication", VK::text, true},
    FieldInfo{"ai_limitation", VK::text, true},
    FieldInfo{"ai_metric", VK::dictionary_list, false},
    FieldInfo{"ai_metricDecisionThreshold", VK::dictionary_list, false},
    FieldInfo{"ai_modelDataPreprocessing", VK::text_list, false},
    FieldInfo{"ai_modelExplainability", VK::text_list, false},
    FieldInfo{"ai_safetyRiskAssessment", VK::enumeration, true, EK::safety_risk},
    FieldInfo{"ai_standardCompliance", VK::text_list, false},
    FieldInfo{"ai_typeOfModel", VK::text_list, false},
    FieldInfo{"ai_useSensitivePersonalInformation", VK::enumeration, true, EK::presence},
};

constexpr std::array kDatasetPackageFields{
    AIBOMKIT_PACKAGE_CORE_FIELDS,
    FieldInfo{"dataset_anonymizationMethodUsed", VK::text, true},
    FieldInfo{"dataset_confidentialityLevel", VK::enumeration, true, EK::confidentiality_level},
    FieldInfo{"dataset_dataCollectionProcess", VK::text, true},
    FieldInfo{"dataset_dataPreprocessing", VK::text, true},
    FieldInfo{"dataset_datasetAvailability", VK::enumeration, true, EK::dataset_availability},
    FieldInfo{"dataset_datasetNoise", VK::text, true},
    FieldInfo{"dataset_datasetSize", VK::non_negative_integer, true},
    FieldInfo{"dataset_datasetType", VK::enumeration_list, false, EK::dataset_type},
    FieldInfo{"dataset_datasetUpdateMechanism", VK::text, true},
    FieldInfo{"dataset_hasSensitivePersonalInformation", VK::enumeration, true, EK::presence},
    FieldInfo{"dataset_intendedUse", VK::text, true},
    FieldInfo{"dataset_knownBias", VK::text, true},
    FieldInfo{"dataset_sensor", VK::dictionary_list, false},
};

#undef AIBOMKIT_PACKAGE_CORE_FIELDS

constexpr std::array kFileFields{
    FieldInfo{"spdxId", VK::iri, true},
    FieldInfo{"name", VK::text, true},
    FieldInfo{"contentType", VK::text, true},
    FieldInfo{"primaryPurpose", VK::enumeration, true, EK::software_purpose},
};

constexpr std::array kAgentFields{
    FieldInfo{"spdxId", VK::iri, true},
    FieldInfo{"name", VK::text, true},
    FieldInfo{"externalIdentifier", VK::text_list, false},
};

constexpr std::array kLicenseFields{
    FieldInfo{"spdxId", VK::iri, true},
    FieldInfo{"simplelicensing_licenseExpression", VK::text, true},
};

constexpr std::array kDictionaryEntryFields{
    FieldInfo{"key", VK::text, true},
    FieldInfo{"value", VK::text, true},
};

constexpr std::array kEnergyConsumptionFields{
    FieldInfo{"ai_trainingEnergyConsumption", VK::energy_description_list, false},
    FieldInfo{"ai_finetuningEnergyConsumption", VK::energy_description_list, false},
    FieldInfo{"ai_inferenceEnergyConsumption", VK::energy_description_list, false},
};

constexpr std::array kEnergyDescriptionFields{
    FieldInfo{"ai_energyQuantity", VK::decimal, true},
    FieldInfo{"ai_energyUnit", VK::enumeration, true, EK::energy_unit},
    FieldInfo{"comment", VK::text, true},
};

constexpr std::array kRelationshipFields{
    FieldInfo{"spdxId", VK::iri, true},
    FieldInfo{"relationshipType", VK::enumeration, true, EK::relationship_type},
    FieldInfo{"from", VK::iri, true},
    FieldInfo{"to", VK::iri_list, false},
    FieldInfo{"description", VK::text, true},
};

constexpr std::array<std::string_view, 6> kPassThrough{
    "externalIdentifier", "externalRef", "packageUrl", "verifiedUsing", "locator",
    "impactStatement"};

constexpr std::array kAllClasses{
    NodeClass::document, NodeClass::creation_info, NodeClass::ai_package,
    NodeClass::dataset_package, NodeClass::file, NodeClass::agent, NodeClass::license,
    NodeClass::dictionary_entry, NodeClass::energy_consumption, NodeClass::energy_description,
    NodeClass::relationship};

template <std::size_t N>
std::span<const FieldInfo> span_of(const std::array<FieldInfo, N>& a) noexcept {
    return {a.data(), a.size()};
}

}  // namespace

std::span<const FieldInfo> field_inventory(NodeClass cls) noexcept {
    switch (cls) {
        case NodeClass::document: return span_of(kDocumentFields);
        case NodeClass::creation_info: return span_of(kCreationInfoFields);
        case NodeClass::ai_package: return span_of(kAiPackageFields);
        case NodeClass::dataset_package: return span_of(kDatasetPackageFields);
        case NodeClass::file: return span_of(kFileFields);
        case NodeClass::agent: return span_of(kAgentFields);
        case NodeClass::license: return span_of(kLicenseFields);
        case NodeClass::dictionary_entry: return span_of(kDictionaryEntryFields);
        case NodeClass::energy_consumption: return span_of(kEnergyConsumptionFields);
        case NodeClass::energy_description: return span_of(kEnergyDescriptionFields);
        case NodeClass::relationship: return span_of(kRelationshipFields);
    }
    return {};
}

const FieldInfo* find_field(NodeClass cls, std::string_view key) noexcept {
    for (const auto& f : field_inventory(cls)) {
        if (f.key == key) return &f;
    }
    return nullptr;
}

std::string_view type_tag(NodeClass cls) noexcept {
    switch (cls) {
        case NodeClass::document: return "SpdxDocument";
        case NodeClass::creation_info: return "CreationInfo";
        case NodeClass::ai_package: return "ai_AIPackage";
        case NodeClass::dataset_package: return "dataset_DatasetPackage";
        case NodeClass::file: return "software_File";
        case NodeClass::agent: return "Organization";
        case NodeClass::license: return "simplelicensing_LicenseExpression";
        case NodeClass::dictionary_entry: return "DictionaryEntry";
        case NodeClass::energy_consumption: return "ai_EnergyConsumption";
        case NodeClass::energy_description: return "ai_EnergyConsumptionDescription";
        case NodeClass::relationship: return "Relationship";
    }
    return {};
}

std::optional<NodeClass> node_class_from_tag(std::string_view tag) noexcept {
    if (tag == "Person" || tag == "Organization" || tag == "Tool") return NodeClass::agent;
    for (auto cls : kAllClasses) {
        if (type_tag(cls) == tag) return cls;
    }
    return std::nullopt;
}

std::string_view strip_profile_prefix(std::string_view key) noexcept {
    for (std::string_view prefix : {"ai_", "dataset_", "software_", "simplelicensing_"}) {
        if (key.starts_with(prefix)) return key.substr(prefix.size());
    }
    return key;
}

std::span<const std::string_view> pass_through_fields() noexcept {
    return {kPassThrough.data(), kPassThrough.size()};
}

bool is_known_field_name(std::string_view name) noexcept {
    if (std::ranges::find(kPassThrough, name) != kPassThrough.end()) return true;
    for (auto cls : kAllClasses) {
        for (const auto& f : field_inventory(cls)) {
            if (strip_profile_prefix(f.key) == name) return true;
        }
    }
    return false;
}

}  // namespace aibomkit
