#include <algorithm>
#include <array>

#include "aibomkit/validator.hpp"

namespace aibomkit {

namespace {

constexpr auto E = Severity::error;
constexpr auto W = Severity::warning;
constexpr auto I = Severity::info;

// clang-format off
constexpr std::array kCatalog{
    // AI Profile mandatory fields
    Rule{"AI-M-01", E, "AIPackage", "buildTime", "buildTime is required", "AI Profile mandatory fields: buildTime Required(1..1)"},
    Rule{"AI-M-02", E, "AIPackage", "downloadLocation", "at least one downloadLocation is required", "AI Profile mandatory fields: downloadLocation Required(1..*)"},
    Rule{"AI-M-03", E, "AIPackage", "name", "name is required", "AI Profile mandatory fields: name Required(1..1)"},
    Rule{"AI-M-04", E, "AIPackage", "packageVersion", "packageVersion is required", "AI Profile mandatory fields: packageVersion Required(1..1)"},
    Rule{"AI-M-05", E, "AIPackage", "primaryPurpose", "primaryPurpose is required", "AI Profile mandatory fields: primaryPurpose Required(1..1)"},
    Rule{"AI-M-06", E, "AIPackage", "releaseTime", "releaseTime is required", "AI Profile mandatory fields: releaseTime Required(1..1)"},
    Rule{"AI-M-07", E, "AIPackage", "spdxId", "spdxId is required", "AI Profile mandatory fields: spdxId Required(1..1)"},
    Rule{"AI-M-08", E, "AIPackage", "suppliedBy", "at least one suppliedBy agent is required", "AI Profile mandatory fields: suppliedBy Required(1..*)"},
    Rule{"AI-M-09", E, "AIPackage", "relationship:hasConcludedLicense", "exactly one hasConcludedLicense relationship is required", "AI Profile mandatory fields: relationshipType = hasConcludedLicense Required(1..1), MUST exist exactly one"},
    Rule{"AI-M-10", E, "AIPackage", "relationship:hasDeclaredLicense", "exactly one hasDeclaredLicense relationship is required", "AI Profile mandatory fields: relationshipType = hasDeclaredLicense Required(1..1), MUST exist exactly one"},

    // AI Profile optional fields: upper bounds
    Rule{"AI-C-01", E, "AIPackage", "ai_autonomyType", "autonomyType takes at most one value", "AI Profile optional fields: autonomyType Optional(0..1)"},
    Rule{"AI-C-02", E, "AIPackage", "ai_domain", "domain takes at most one value", "AI Profile optional fields: domain Optional(0..1)"},
    Rule{"AI-C-03", E, "AIPackage", "ai_energyConsumption", "energyConsumption takes at most one value", "AI Profile optional fields: energyConsumption Optional(0..1)"},
    Rule{"AI-C-04", E, "AIPackage", "ai_informationAboutTraining", "informationAboutTraining takes at most one value", "AI Profile optional fields: informationAboutTraining Optional(0..1)"},
    Rule{"AI-C-05", E, "AIPackage", "ai_informationAboutApplication", "informationAboutApplication takes at most one value", "AI Profile optional fields: informationAboutApplication Optional(0..1)"},
    Rule{"AI-C-06", E, "AIPackage", "ai_limitation", "limitation takes at most one value", "AI Profile optional fields: limitation Optional(0..1)"},
    Rule{"AI-C-07", E, "AIPackage", "ai_safetyRiskAssessment", "safetyRiskAssessment takes at most one value", "AI Profile optional fields: safetyRiskAssessment Optional(0..1)"},
    Rule{"AI-C-08", E, "AIPackage", "ai_useSensitivePersonalInformation", "useSensitivePersonalInformation takes at most one value", "AI Profile optional fields: useSensitivePersonalInformation Optional(0..1)"},
    Rule{"AI-C-09", E, "EnergyConsumptionDescription", "ai_energyQuantity", "energyQuantity takes exactly one value", "AI Profile optional fields: energyQuantity Optional(1..1)"},
    Rule{"AI-C-10", E, "EnergyConsumptionDescription", "ai_energyUnit", "energyUnit takes exactly one value", "AI Profile optional fields: energyUnit Optional(1..1)"},
    Rule{"AI-R-01", W, "AIPackage", "relationship:trainedOn", "more than one trainedOn relationship", "AI Profile optional fields: relationshipType = trainedOn Optional(0..1)"},
    Rule{"AI-R-02", W, "AIPackage", "relationship:testedOn", "more than one testedOn relationship", "AI Profile optional fields: relationshipType = testedOn Optional(0..1)"},

    // Dataset Profile mandatory fields
    Rule{"DS-M-01", E, "DatasetPackage", "buildTime", "buildTime is required", "Dataset Profile mandatory fields: buildTime Required(1..1)"},
    Rule{"DS-M-02", E, "DatasetPackage", "dataset_datasetType", "at least one datasetType is required", "Dataset Profile mandatory fields: datasetType Required(1..1)"},
    Rule{"DS-M-03", E, "DatasetPackage", "downloadLocation", "at least one downloadLocation is required", "Dataset Profile mandatory fields: downloadLocation Required(1..*)"},
    Rule{"DS-M-04", E, "DatasetPackage", "originatedBy", "at least one originatedBy agent is required", "Dataset Profile mandatory fields: originatedBy Required(1..*)"},
    Rule{"DS-M-05", E, "DatasetPackage", "packageVersion", "packageVersion is required", "Dataset Profile mandatory fields: packageVersion Required(1..1)"},
    Rule{"DS-M-06", E, "DatasetPackage", "primaryPurpose", "primaryPurpose is required", "Dataset Profile mandatory fields: primaryPurpose Required(1..1)"},
    Rule{"DS-M-07", E, "DatasetPackage", "name", "name is required", "Dataset Profile mandatory fields: name Required(1..1)"},
    Rule{"DS-M-08", E, "DatasetPackage", "releaseTime", "releaseTime is required", "Dataset Profile mandatory fields: releaseTime Required(1..1)"},
    Rule{"DS-M-09", E, "DatasetPackage", "spdxId", "spdxId is required", "Dataset Profile mandatory fields: spdxId Required(1..1)"},
    Rule{"DS-M-10", E, "DatasetPackage", "relationship:hasConcludedLicense", "exactly one hasConcludedLicense relationship is required", "Dataset Profile mandatory fields: relationshipType = hasConcludedLicense Required(1..1), MUST exist exactly one"},
    Rule{"DS-M-11", E, "DatasetPackage", "relationship:hasDeclaredLicense", "exactly one hasDeclaredLicense relationship is required", "Dataset Profile mandatory fields: relationshipType = hasDeclaredLicense Required(1..1), MUST exist exactly one"},
    Rule{"DS-W-01", W, "DatasetPackage", "suppliedBy", "suppliedBy is absent", "Common package fields: suppliedBy (mandatory); absent from the Dataset Profile mandatory table"},

    // Dataset Profile optional fields: upper bounds
    Rule{"DS-C-01", E, "DatasetPackage", "dataset_anonymizationMethodUsed", "anonymizationMethodUsed takes at most one value", "Dataset Profile optional fields: anonymizationMethodUsed Optional(0..1)"},
    Rule{"DS-C-02", E, "DatasetPackage", "dataset_confidentialityLevel", "confidentialityLevel takes at most one value", "Dataset Profile optional fields: confidentialityLevel Optional(0..1)"},
    Rule{"DS-C-03", E, "DatasetPackage", "dataset_dataCollectionProcess", "dataCollectionProcess takes at most one value", "Dataset Profile optional fields: dataCollectionProcess Optional(0..1)"},
    Rule{"DS-C-04", E, "DatasetPackage", "dataset_dataPreprocessing", "dataPreprocessing takes at most one value", "Dataset Profile optional fields: dataPreprocessing Optional(0..1)"},
    Rule{"DS-C-05", E, "DatasetPackage", "dataset_datasetAvailability", "datasetAvailability takes at most one value", "Dataset Profile optional fields: datasetAvailability Optional(0..1)"},
    Rule{"DS-C-06", E, "DatasetPackage", "dataset_datasetNoise", "datasetNoise takes at most one value", "Dataset Profile optional fields: datasetNoise Optional(0..1)"},
    Rule{"DS-C-07", E, "DatasetPackage", "dataset_datasetSize", "datasetSize takes at most one value", "Dataset Profile optional fields: datasetSize Optional(0..1)"},
    Rule{"DS-C-08", E, "DatasetPackage", "dataset_datasetUpdateMechanism", "datasetUpdateMechanism takes at most one value", "Dataset Profile optional fields: datasetUpdateMechanism Optional(0..1)"},
    Rule{"DS-C-09", E, "DatasetPackage", "dataset_hasSensitivePersonalInformation", "hasSensitivePersonalInformation takes at most one value", "Dataset Profile optional fields: hasSensitivePersonalInformation Optional(0..1)"},
    Rule{"DS-C-10", E, "DatasetPackage", "dataset_intendedUse", "intendedUse takes at most one value", "Dataset Profile optional fields: intendedUse Optional(0..1)"},
    Rule{"DS-C-11", E, "DatasetPackage", "dataset_knownBias", "knownBias takes at most one value", "Dataset Profile optional fields: knownBias Optional(0..1)"},

    // Energy consumption
    Rule{"EN-01", E, "EnergyConsumptionDescription", "ai_energyQuantity", "energy consumption description without energyQuantity", "energyConsumption: if it has a value, then energyQuantity and energyUnit are mandatory"},
    Rule{"EN-02", E, "EnergyConsumptionDescription", "ai_energyUnit", "energy consumption description without energyUnit", "energyConsumption: if it has a value, then energyQuantity and energyUnit are mandatory"},
    Rule{"EN-03", W, "EnergyConsumption", "ai_energyConsumption", "energyConsumption has no training, finetuning or inference description", "energyConsumption: training, inference, and fine-tuning energy consumption"},

    // Enumerations
    Rule{"ENUM-01", E, "Package", "primaryPurpose", "primaryPurpose is not a SoftwarePurpose token", "primaryPurpose: SoftwarePurpose (select one from the list)"},
    Rule{"ENUM-02", E, "AIPackage", "ai_autonomyType", "autonomyType is not a PresenceType token", "autonomyType: PresenceType (yes, no, noAssertion)"},
    Rule{"ENUM-03", E, "AIPackage", "ai_safetyRiskAssessment", "safetyRiskAssessment is not a SafetyRiskAssessmentType token", "safetyRiskAssessment: SafetyRiskAssessmentType (serious, high, medium, low)"},
    Rule{"ENUM-04", E, "AIPackage", "ai_useSensitivePersonalInformation", "useSensitivePersonalInformation is not a PresenceType token", "useSensitivePersonalInformation: PresenceType (yes, no, noAssertion)"},
    Rule{"ENUM-05", E, "EnergyConsumptionDescription", "ai_energyUnit", "energyUnit is not an EnergyUnitType token", "energyUnit: EnergyUnitType (kilowattHour, megajoule, other)"},
    Rule{"ENUM-06", E, "DatasetPackage", "dataset_datasetType", "datasetType has a value outside DatasetType", "datasetType: DatasetType (audio, categorical, graph, image, noAssertion, ...)"},
    Rule{"ENUM-07", E, "DatasetPackage", "dataset_confidentialityLevel", "confidentialityLevel is not a ConfidentialityLevelType token", "confidentialityLevel: ConfidentialityLevelType (red, amber, green, clear)"},
    Rule{"ENUM-08", E, "DatasetPackage", "dataset_datasetAvailability", "datasetAvailability is not a DatasetAvailabilityType token", "datasetAvailability: DatasetAvailabilityType (clickthrough, directDownload, query, registration, scrapingScript)"},
    Rule{"ENUM-09", E, "DatasetPackage", "dataset_hasSensitivePersonalInformation", "hasSensitivePersonalInformation is not a PresenceType token", "hasSensitivePersonalInformation: PresenceType (yes, no, noAssertion)"},
    Rule{"ENUM-10", E, "Relationship", "relationshipType", "relationshipType is missing or not a known relationship type", "Key relationships: contains, hasConcludedLicense, hasDeclaredLicense, testedOn, trainedOn"},

    // Scalar formats
    Rule{"FMT-01", E, "Element", "", "timestamp is not YYYY-MM-DDThh:mm:ssZ", "buildTime / releaseTime: ISO-8601 format YYYY-MM-DDThh:mm:ssZ, UTC, second resolution"},
    Rule{"FMT-02", E, "Element", "", "value is not an absolute IRI", "spdxId / downloadLocation: xsd:anyURI"},
    Rule{"FMT-03", E, "DatasetPackage", "dataset_datasetSize", "datasetSize is not a non-negative integer", "datasetSize: xsd:nonNegativeInteger, in bytes"},
    Rule{"FMT-04", E, "EnergyConsumptionDescription", "ai_energyQuantity", "energyQuantity is not a non-negative decimal", "energyQuantity: xsd:decimal"},
    Rule{"FMT-05", E, "Element", "", "value has the wrong shape for its property", ""},

    // Relationships
    Rule{"REL-01", E, "Relationship", "to", "relationship has no \"to\" target", "Relationship: \"to\" property"},
    Rule{"REL-02", E, "Relationship", "to", "license relationship targets its own source element", "hasConcludedLicense / hasDeclaredLicense: an AnyLicenseInfo as its \"to\" property"},
    Rule{"REL-03", E, "Relationship", "from", "relationship has no \"from\" element", "hasConcludedLicense / hasDeclaredLicense: that element as its from property"},

    // Document and supporting nodes
    Rule{"DOC-01", W, "SpdxDocument", "rootElement", "document declares no rootElement", ""},
    Rule{"DOC-02", E, "SpdxDocument", "rootElement", "rootElement does not name an element of the document", ""},
    Rule{"DOC-03", E, "SpdxDocument", "creationInfo", "document has no creationInfo", "CreationInfo: createdBy"},
    Rule{"DOC-04", E, "CreationInfo", "createdBy", "creationInfo has no createdBy agent", "CreationInfo: createdBy"},
    Rule{"DOC-05", E, "CreationInfo", "created", "creationInfo has no created timestamp", ""},
    Rule{"AGT-01", E, "Agent", "name", "agent has no name", "suppliedBy: Agent (Organization or Person)"},
    Rule{"DICT-01", E, "DictionaryEntry", "key", "dictionary entry has no key", "hyperparameter / metric / sensor: DictionaryEntry"},
    Rule{"FILE-01", E, "File", "name", "file has no name", ""},

    // Informational
    Rule{"GEN-01", I, "Element", "", "unrecognized property preserved as opaque", ""},
    Rule{"GEN-02", I, "Element", "", "node type outside the AI and Dataset profiles preserved as opaque", ""},
    Rule{"GEN-03", I, "Relationship", "to", "relationship target is outside this document", "spdxId: references may be internal or external"},
    Rule{"GEN-04", W, "Element", "", "value is a scaffold placeholder", ""},
};
// clang-format on

}  // namespace

std::span<const Rule> rule_catalog() noexcept { return {kCatalog.data(), kCatalog.size()}; }

const Rule* find_rule(std::string_view id) noexcept {
    auto it = std::ranges::find(kCatalog, id, &Rule::id);
    return it == kCatalog.end() ? nullptr : &*it;
}

}  // namespace aibomkit
