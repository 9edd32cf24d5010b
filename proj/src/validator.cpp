#include "aibomkit/validator.hpp"

#include <algorithm>
#include <array>

#include "aibomkit/schema.hpp"

namespace aibomkit {

using nlohmann::json;

namespace {

/// Per-field rule ids: the one used for too many values, and the one used for a
/// value outside its enumeration.
struct FieldRules {
    NodeClass cls;
    std::string_view key;
    std::string_view cardinality;
    std::string_view value;
};

// clang-format off
constexpr std::array kFieldRules{
    FieldRules{NodeClass::ai_package, "buildTime", "AI-M-01", ""},
    FieldRules{NodeClass::ai_package, "name", "AI-M-03", ""},
    FieldRules{NodeClass::ai_package, "packageVersion", "AI-M-04", ""},
    FieldRules{NodeClass::ai_package, "primaryPurpose", "AI-M-05", "ENUM-01"},
    FieldRules{NodeClass::ai_package, "releaseTime", "AI-M-06", ""},
    FieldRules{NodeClass::ai_package, "spdxId", "AI-M-07", ""},
    FieldRules{NodeClass::ai_package, "ai_autonomyType", "AI-C-01", "ENUM-02"},
    FieldRules{NodeClass::ai_package, "ai_domain", "AI-C-02", ""},
    FieldRules{NodeClass::ai_package, "ai_energyConsumption", "AI-C-03", ""},
    FieldRules{NodeClass::ai_package, "ai_informationAboutTraining", "AI-C-04", ""},
    FieldRules{NodeClass::ai_package, "ai_informationAboutApplication", "AI-C-05", ""},
    FieldRules{NodeClass::ai_package, "ai_limitation", "AI-C-06", ""},
    FieldRules{NodeClass::ai_package, "ai_safetyRiskAssessment", "AI-C-07", "ENUM-03"},
    FieldRules{NodeClass::ai_package, "ai_useSensitivePersonalInformation", "AI-C-08", "ENUM-04"},
    FieldRules{NodeClass::energy_description, "ai_energyQuantity", "AI-C-09", ""},
    FieldRules{NodeClass::energy_description, "ai_energyUnit", "AI-C-10", "ENUM-05"},
    FieldRules{NodeClass::dataset_package, "buildTime", "DS-M-01", ""},
    FieldRules{NodeClass::dataset_package, "dataset_datasetType", "", "ENUM-06"},
    FieldRules{NodeClass::dataset_package, "packageVersion", "DS-M-05", ""},
    FieldRules{NodeClass::dataset_package, "primaryPurpose", "DS-M-06", "ENUM-01"},
    FieldRules{NodeClass::dataset_package, "name", "DS-M-07", ""},
    FieldRules{NodeClass::dataset_package, "releaseTime", "DS-M-08", ""},
    FieldRules{NodeClass::dataset_package, "spdxId", "DS-M-09", ""},
    FieldRules{NodeClass::dataset_package, "dataset_anonymizationMethodUsed", "DS-C-01", ""},
    FieldRules{NodeClass::dataset_package, "dataset_confidentialityLevel", "DS-C-02", "ENUM-07"},
    FieldRules{NodeClass::dataset_package, "dataset_dataCollectionProcess", "DS-C-03", ""},
    FieldRules{NodeClass::dataset_package, "dataset_dataPreprocessing", "DS-C-04", ""},
    FieldRules{NodeClass::dataset_package, "dataset_datasetAvailability", "DS-C-05", "ENUM-08"},
    FieldRules{NodeClass::dataset_package, "dataset_datasetNoise", "DS-C-06", ""},
    FieldRules{NodeClass::dataset_package, "dataset_datasetSize", "DS-C-07", ""},
    FieldRules{NodeClass::dataset_package, "dataset_datasetUpdateMechanism", "DS-C-08", ""},
    FieldRules{NodeClass::dataset_package, "dataset_hasSensitivePersonalInformation", "DS-C-09", "ENUM-09"},
    FieldRules{NodeClass::dataset_package, "dataset_intendedUse", "DS-C-10", ""},
    FieldRules{NodeClass::dataset_package, "dataset_knownBias", "DS-C-11", ""},
    FieldRules{NodeClass::file, "primaryPurpose", "", "ENUM-01"},
    FieldRules{NodeClass::relationship, "relationshipType", "", "ENUM-10"},
};
// clang-format on

const FieldRules* field_rules(NodeClass cls, std::string_view key) {
    for (const auto& r : kFieldRules) {
        if (r.cls == cls && r.key == key) return &r;
    }
    return nullptr;
}

constexpr std::string_view kPlaceholderText = "PLACEHOLDER";
constexpr std::string_view kPlaceholderNamespace = "https://example.invalid/";

bool is_placeholder(std::string_view text) {
    return text.starts_with(kPlaceholderText) || text.starts_with(kPlaceholderNamespace);
}

bool is_pass_through(std::string_view key) {
    auto fields = pass_through_fields();
    return std::ranges::find(fields, key) != fields.end();
}

std::string index_path(std::string_view base, std::size_t i) {
    return std::string(base) + "[" + std::to_string(i) + "]";
}

std::string join(std::string_view base, std::string_view key) {
    if (base.empty()) return std::string(key);
    return std::string(base) + "." + std::string(key);
}

/// Collects diagnostics for one element; severity and message prefix come from the catalog.
class Sink {
public:
    explicit Sink(std::optional<std::string> element) : element_(std::move(element)) {}

    void add(std::string_view rule_id, std::string path, std::string detail = {}) {
        const Rule* rule = find_rule(rule_id);
        std::string message(rule ? rule->summary : rule_id);
        if (!detail.empty()) message += ": " + detail;
        out_.push_back({std::string(rule_id), rule ? rule->severity : Severity::error, element_,
                        std::move(path), std::move(message)});
    }

    void append(std::vector<Diagnostic> more) {
        for (auto& d : more) out_.push_back(std::move(d));
    }

    std::vector<Diagnostic> take() { return std::move(out_); }

private:
    std::optional<std::string> element_;
    std::vector<Diagnostic> out_;
};

void check_iri(Sink& sink, const std::string& value, std::string path) {
    if (!value.empty() && !is_valid_iri(value)) sink.add("FMT-02", std::move(path), "'" + value + "'");
}

/// A value the reader could not type. `key` is a modelled property of `cls`.
void check_raw_value(Sink& sink, NodeClass cls, const FieldInfo& field, const json& value,
                     const std::string& path) {
    const FieldRules* rules = field_rules(cls, field.key);
    if (field.max_one && value.is_array() && value.size() > 1) {
        if (rules && !rules->cardinality.empty()) {
            sink.add(rules->cardinality, path, std::to_string(value.size()) + " values given");
        } else {
            sink.add("FMT-05", path, "expected a single value");
        }
        return;
    }
    const bool stringly = value.is_string() || (value.is_array() && std::ranges::all_of(value, [](const json& x) {
                                                    return x.is_string();
                                                }));
    switch (field.kind) {
        case ValueKind::timestamp:
            sink.add(stringly ? "FMT-01" : "FMT-05", path, value.dump());
            return;
        case ValueKind::iri:
        case ValueKind::iri_list:
            sink.add(stringly ? "FMT-02" : "FMT-05", path, value.dump());
            return;
        case ValueKind::enumeration:
        case ValueKind::enumeration_list:
            if (stringly && rules && !rules->value.empty()) {
                sink.add(rules->value, path, value.dump());
            } else {
                sink.add("FMT-05", path, value.dump());
            }
            return;
        case ValueKind::non_negative_integer: sink.add("FMT-03", path, value.dump()); return;
        case ValueKind::decimal: sink.add("FMT-04", path, value.dump()); return;
        default: sink.add("FMT-05", path, value.dump()); return;
    }
}

void check_extras(Sink& sink, NodeClass cls, const Extras& extras, std::string_view base) {
    for (const auto& [key, value] : extras) {
        const auto path = join(base, key);
        if (const FieldInfo* field = find_field(cls, key)) {
            check_raw_value(sink, cls, *field, value, path);
        } else if (!is_pass_through(key)) {
            sink.add("GEN-01", path, "'" + key + "'");
        }
    }
}

void check_agent(Sink& sink, const Agent& a, const std::string& path, bool nested) {
    if (a.name.empty() && !(nested && a.is_reference()) && !a.extras.contains("name"))
        sink.add("AGT-01", join(path, "name"));
    if (a.spdx_id) check_iri(sink, *a.spdx_id, join(path, "spdxId"));
    check_extras(sink, NodeClass::agent, a.extras, path);
}

void check_agents(Sink& sink, const std::vector<Agent>& agents, std::string_view key) {
    for (std::size_t i = 0; i < agents.size(); ++i) check_agent(sink, agents[i], index_path(key, i), true);
}

void check_dictionary(Sink& sink, const std::vector<DictionaryEntry>& entries, std::string_view key) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto path = index_path(key, i);
        if (entries[i].key.empty() && !entries[i].extras.contains("key")) sink.add("DICT-01", join(path, "key"));
        check_extras(sink, NodeClass::dictionary_entry, entries[i].extras, path);
    }
}

void check_creation_info(Sink& sink, const CreationInfo& ci, const std::string& path) {
    check_agents(sink, ci.created_by, join(path, "createdBy"));
    check_extras(sink, NodeClass::creation_info, ci.extras, path);
}

constexpr std::array<std::pair<std::string_view, std::vector<EnergyConsumptionDescription> EnergyConsumption::*>, 3>
    kEnergyLists{{{"ai_trainingEnergyConsumption", &EnergyConsumption::training},
                  {"ai_finetuningEnergyConsumption", &EnergyConsumption::finetuning},
                  {"ai_inferenceEnergyConsumption", &EnergyConsumption::inference}}};

void check_energy_values(Sink& sink, const EnergyConsumption& ec) {
    const std::string base = "ai_energyConsumption";
    bool any = false;
    for (const auto& [key, member] : kEnergyLists) {
        const auto& list = ec.*member;
        any = any || !list.empty() || ec.extras.contains(std::string(key));
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto path = index_path(join(base, key), i);
            const auto& d = list[i];
            if (d.energy_quantity && d.energy_quantity->value() < 0)
                sink.add("FMT-04", join(path, "ai_energyQuantity"), "'" + d.energy_quantity->lexical() + "'");
            check_extras(sink, NodeClass::energy_description, d.extras, path);
        }
    }
    if (!any) sink.add("EN-03", base);
    check_extras(sink, NodeClass::energy_consumption, ec.extras, base);
}

void check_placeholder(Sink& sink, std::string_view value, std::string path) {
    if (is_placeholder(value)) sink.add("GEN-04", std::move(path), "'" + std::string(value) + "'");
}

void check_core_values(Sink& sink, const PackageCore& c) {
    if (c.spdx_id) check_iri(sink, *c.spdx_id, "spdxId");
    for (std::size_t i = 0; i < c.download_location.size(); ++i) {
        const auto path = index_path("downloadLocation", i);
        check_iri(sink, c.download_location[i], path);
        check_placeholder(sink, c.download_location[i], path);
    }
    check_placeholder(sink, c.name, "name");
    check_placeholder(sink, c.package_version, "packageVersion");
    check_agents(sink, c.supplied_by, "suppliedBy");
    check_agents(sink, c.originated_by, "originatedBy");
    for (const auto& agents : {&c.supplied_by, &c.originated_by}) {
        const std::string_view key = agents == &c.supplied_by ? "suppliedBy" : "originatedBy";
        for (std::size_t i = 0; i < agents->size(); ++i)
            check_placeholder(sink, (*agents)[i].name, join(index_path(key, i), "name"));
    }
}

std::vector<Diagnostic> field_values(const AIPackage& p) {
    Sink sink(p.core.spdx_id);
    check_core_values(sink, p.core);
    if (p.energy_consumption) check_energy_values(sink, *p.energy_consumption);
    check_dictionary(sink, p.hyperparameter, "ai_hyperparameter");
    check_dictionary(sink, p.metric, "ai_metric");
    check_dictionary(sink, p.metric_decision_threshold, "ai_metricDecisionThreshold");
    check_extras(sink, NodeClass::ai_package, p.core.extras, "");
    return sink.take();
}

std::vector<Diagnostic> field_values(const DatasetPackage& p) {
    Sink sink(p.core.spdx_id);
    check_core_values(sink, p.core);
    check_dictionary(sink, p.sensor, "dataset_sensor");
    check_extras(sink, NodeClass::dataset_package, p.core.extras, "");
    return sink.take();
}

std::vector<Diagnostic> field_values(const FileArtifact& f) {
    Sink sink(f.spdx_id);
    if (f.spdx_id) check_iri(sink, *f.spdx_id, "spdxId");
    if (f.name.empty() && !f.extras.contains("name")) sink.add("FILE-01", "name");
    check_extras(sink, NodeClass::file, f.extras, "");
    return sink.take();
}

std::vector<Diagnostic> field_values(const Agent& a) {
    Sink sink(a.spdx_id);
    check_agent(sink, a, "", false);
    return sink.take();
}

std::vector<Diagnostic> field_values(const LicenseElement& l) {
    Sink sink(l.spdx_id);
    if (l.spdx_id) check_iri(sink, *l.spdx_id, "spdxId");
    check_extras(sink, NodeClass::license, l.extras, "");
    return sink.take();
}

std::vector<Diagnostic> field_values(const GenericElement& g) {
    Sink sink(g.spdx_id);
    if (g.type_tag == type_tag(NodeClass::relationship)) {
        auto it = g.properties.find("relationshipType");
        sink.add("ENUM-10", "relationshipType", it == g.properties.end() ? "absent" : it->second.dump());
    } else {
        sink.add("GEN-02", "", "'" + g.type_tag + "'");
    }
    return sink.take();
}

bool has_text(const std::optional<std::string>& s) { return s && !s->empty(); }

void require(Sink& sink, bool present, const Extras& extras, std::string_view key, std::string_view rule) {
    if (!present && !extras.contains(std::string(key))) sink.add(rule, std::string(key));
}

std::vector<Diagnostic> relationship_checks(const SpdxDocument& doc, const Relationship& r) {
    Sink sink(r.spdx_id);
    if (r.spdx_id) check_iri(sink, *r.spdx_id, "spdxId");
    if (r.from.empty()) {
        if (!r.extras.contains("from")) sink.add("REL-03", "from");
    } else {
        check_iri(sink, r.from, "from");
    }
    if (r.to.empty() && !r.extras.contains("to")) sink.add("REL-01", "to");
    for (std::size_t i = 0; i < r.to.size(); ++i) {
        const auto path = index_path("to", i);
        const auto& target = r.to[i];
        if (r.is_license()) {
            // License targets may be NONE/NOASSERTION markers or opaque expressions.
            if (!r.from.empty() && target == r.from) sink.add("REL-02", path, "'" + target + "'");
            continue;
        }
        check_iri(sink, target, path);
        if (!doc.contains(target) && is_valid_iri(target)) sink.add("GEN-03", path, "'" + target + "'");
    }
    check_extras(sink, NodeClass::relationship, r.extras, "");
    return sink.take();
}

std::vector<Diagnostic> document_checks(const SpdxDocument& doc) {
    Sink sink(doc.spdx_id);
    if (doc.spdx_id) check_iri(sink, *doc.spdx_id, "spdxId");
    if (doc.creation_info) {
        const auto& ci = *doc.creation_info;
        if (ci.created_by.empty() && !ci.extras.contains("createdBy")) sink.add("DOC-04", "creationInfo.createdBy");
        if (!ci.created && !ci.extras.contains("created")) sink.add("DOC-05", "creationInfo.created");
        check_creation_info(sink, ci, "creationInfo");
    } else if (!doc.extras.contains("creationInfo")) {
        sink.add("DOC-03", "creationInfo");
    }
    if (doc.root_elements.empty()) {
        if (!doc.extras.contains("rootElement")) sink.add("DOC-01", "rootElement");
    }
    for (std::size_t i = 0; i < doc.root_elements.size(); ++i) {
        if (!doc.contains(doc.root_elements[i]))
            sink.add("DOC-02", index_path("rootElement", i), "'" + doc.root_elements[i] + "'");
    }
    check_extras(sink, NodeClass::document, doc.extras, "");
    return sink.take();
}

std::size_t count_from(const SpdxDocument& doc, std::string_view id, RelationshipType type) {
    return static_cast<std::size_t>(std::ranges::count_if(
        doc.relationships(), [&](const Relationship& r) { return r.from == id && r.type == type; }));
}

void sort_by_rule(std::vector<Diagnostic>& ds) {
    std::ranges::stable_sort(ds, {}, &Diagnostic::rule_id);
}

void downgrade(std::vector<Diagnostic>& ds) {
    for (auto& d : ds) {
        if (d.severity == Severity::error) d.severity = Severity::warning;
    }
}

}  // namespace

ProfileSet ProfileSet::from_tokens(std::span<const std::string> tokens) {
    ProfileSet p{false, false};
    for (const auto& t : tokens) {
        if (t == "ai") p.ai = true;
        if (t == "dataset") p.dataset = true;
        if (t == "auto") return {};
    }
    if (!p.ai && !p.dataset) return {};
    return p;
}

ProfileSet ProfileSet::from_document(const SpdxDocument& doc) {
    return from_tokens(doc.profile_conformance);
}

std::vector<Diagnostic> check_mandatory_fields(const AIPackage& pkg) {
    const auto& c = pkg.core;
    const auto& x = c.extras;
    Sink sink(c.spdx_id);
    require(sink, c.build_time.has_value(), x, "buildTime", "AI-M-01");
    require(sink, !c.download_location.empty(), x, "downloadLocation", "AI-M-02");
    require(sink, !c.name.empty(), x, "name", "AI-M-03");
    require(sink, !c.package_version.empty(), x, "packageVersion", "AI-M-04");
    require(sink, c.primary_purpose.has_value(), x, "primaryPurpose", "AI-M-05");
    require(sink, c.release_time.has_value(), x, "releaseTime", "AI-M-06");
    require(sink, has_text(c.spdx_id), x, "spdxId", "AI-M-07");
    require(sink, !c.supplied_by.empty(), x, "suppliedBy", "AI-M-08");
    return sink.take();
}

std::vector<Diagnostic> check_mandatory_fields(const DatasetPackage& pkg) {
    const auto& c = pkg.core;
    const auto& x = c.extras;
    Sink sink(c.spdx_id);
    require(sink, c.build_time.has_value(), x, "buildTime", "DS-M-01");
    require(sink, !pkg.dataset_type.empty(), x, "dataset_datasetType", "DS-M-02");
    require(sink, !c.download_location.empty(), x, "downloadLocation", "DS-M-03");
    require(sink, !c.originated_by.empty(), x, "originatedBy", "DS-M-04");
    require(sink, !c.package_version.empty(), x, "packageVersion", "DS-M-05");
    require(sink, c.primary_purpose.has_value(), x, "primaryPurpose", "DS-M-06");
    require(sink, !c.name.empty(), x, "name", "DS-M-07");
    require(sink, c.release_time.has_value(), x, "releaseTime", "DS-M-08");
    require(sink, has_text(c.spdx_id), x, "spdxId", "DS-M-09");
    return sink.take();
}

std::vector<Diagnostic> check_license_relationships(const SpdxDocument& doc, std::string_view package_id) {
    const Element* e = doc.find(package_id);
    if (!e) return {};
    std::string_view concluded;
    std::string_view declared;
    if (std::holds_alternative<AIPackage>(*e)) {
        concluded = "AI-M-09";
        declared = "AI-M-10";
    } else if (std::holds_alternative<DatasetPackage>(*e)) {
        concluded = "DS-M-10";
        declared = "DS-M-11";
    } else {
        return {};
    }
    Sink sink{std::string(package_id)};
    for (auto [type, rule] : {std::pair{RelationshipType::has_concluded_license, concluded},
                              std::pair{RelationshipType::has_declared_license, declared}}) {
        const auto n = count_from(doc, package_id, type);
        if (n != 1)
            sink.add(rule, "relationship:" + std::string(to_token(type)), std::to_string(n) + " found");
    }
    return sink.take();
}

std::vector<Diagnostic> check_conditional_energy(const AIPackage& pkg) {
    Sink sink(pkg.core.spdx_id);
    if (!pkg.energy_consumption) return {};
    for (const auto& [key, member] : kEnergyLists) {
        const auto& list = (*pkg.energy_consumption).*member;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto path = index_path(join("ai_energyConsumption", key), i);
            const auto& d = list[i];
            if (!d.energy_quantity && !d.extras.contains("ai_energyQuantity"))
                sink.add("EN-01", join(path, "ai_energyQuantity"));
            if (!d.energy_unit && !d.extras.contains("ai_energyUnit"))
                sink.add("EN-02", join(path, "ai_energyUnit"));
        }
    }
    return sink.take();
}

std::vector<Diagnostic> check_field_values(const Element& element) {
    return std::visit([](const auto& e) { return field_values(e); }, element);
}

std::vector<Diagnostic> validate_document(const SpdxDocument& doc, ProfileSet profiles) {
    std::vector<Diagnostic> out = document_checks(doc);
    sort_by_rule(out);

    for (const auto& element : doc.elements()) {
        std::vector<Diagnostic> ds = check_field_values(element);
        const auto& id = element_id(element);
        bool selected = true;
        if (const auto* ai = std::get_if<AIPackage>(&element)) {
            selected = profiles.ai;
            auto more = check_mandatory_fields(*ai);
            auto energy = check_conditional_energy(*ai);
            ds.insert(ds.end(), more.begin(), more.end());
            ds.insert(ds.end(), energy.begin(), energy.end());
            if (has_text(id)) {
                Sink sink(id);
                if (count_from(doc, *id, RelationshipType::trained_on) > 1)
                    sink.add("AI-R-01", "relationship:trainedOn");
                if (count_from(doc, *id, RelationshipType::tested_on) > 1)
                    sink.add("AI-R-02", "relationship:testedOn");
                sink.append(check_license_relationships(doc, *id));
                auto rel = sink.take();
                ds.insert(ds.end(), rel.begin(), rel.end());
            }
        } else if (const auto* dataset = std::get_if<DatasetPackage>(&element)) {
            selected = profiles.dataset;
            auto more = check_mandatory_fields(*dataset);
            ds.insert(ds.end(), more.begin(), more.end());
            if (dataset->core.supplied_by.empty() && !dataset->core.extras.contains("suppliedBy")) {
                Sink sink(id);
                sink.add("DS-W-01", "suppliedBy");
                auto w = sink.take();
                ds.insert(ds.end(), w.begin(), w.end());
            }
            if (has_text(id)) {
                auto rel = check_license_relationships(doc, *id);
                ds.insert(ds.end(), rel.begin(), rel.end());
            }
        }
        if (!selected) downgrade(ds);
        sort_by_rule(ds);
        out.insert(out.end(), ds.begin(), ds.end());
    }

    for (const auto& r : doc.relationships()) {
        auto ds = relationship_checks(doc, r);
        sort_by_rule(ds);
        out.insert(out.end(), ds.begin(), ds.end());
    }
    return out;
}

Verdict verdict(std::span<const Diagnostic> diagnostics) noexcept {
    if (diagnostics.empty()) return Verdict::conformant;
    const bool error = std::ranges::any_of(diagnostics, [](const Diagnostic& d) { return d.severity == Severity::error; });
    return error ? Verdict::non_conformant : Verdict::conformant_with_notes;
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::conformant: return "conformant";
        case Verdict::conformant_with_notes: return "conformant with notes";
        case Verdict::non_conformant: return "non-conformant";
    }
    return {};
}

json diagnostics_to_json(std::span<const Diagnostic> diagnostics) {
    json arr = json::array();
    for (const auto& d : diagnostics) {
        const Rule* rule = find_rule(d.rule_id);
        arr.push_back({{"ruleId", d.rule_id},
                       {"severity", std::string(to_string(d.severity))},
                       {"elementId", d.element_id ? json(*d.element_id) : json(nullptr)},
                       {"path", d.path},
                       {"message", d.message},
                       {"paperCitation", rule ? std::string(rule->citation) : std::string()}});
    }
    return arr;
}

std::string render_diagnostics_text(std::span<const Diagnostic> diagnostics) {
    std::string out;
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& d : diagnostics) {
        ++counts[static_cast<int>(d.severity)];
        out += to_string(d.severity);
        out += ' ';
        out += d.rule_id;
        out += ' ';
        out += d.element_id.value_or("-");
        if (!d.path.empty()) {
            out += ' ';
            out += d.path;
        }
        out += ": ";
        out += d.message;
        out += '\n';
    }
    out += std::string(to_string(verdict(diagnostics))) + " (" + std::to_string(counts[0]) + " errors, " +
           std::to_string(counts[1]) + " warnings, " + std::to_string(counts[2]) + " notes)\n";
    return out;
}

}  // namespace aibomkit
