#include "aibomkit/serialization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "aibomkit/schema.hpp"

namespace aibomkit {

using nlohmann::json;

namespace {

// ===========================================================================
// Reading

/// Everything the reader collects across nodes.
struct ReadContext {
    std::vector<Diagnostic> diagnostics;
    std::map<std::string, AgentKind, std::less<>> agent_kinds;

    void unknown_property(const std::optional<std::string>& element, const std::string& path) {
        diagnostics.push_back({"GEN-01", Severity::info, element, path,
                               "unrecognized property '" + path + "' preserved as opaque"});
    }
    void unknown_type(const std::optional<std::string>& element, const std::string& path,
                      const std::string& tag) {
        diagnostics.push_back({"GEN-02", Severity::info, element, path,
                               "node type '" + tag + "' is not modelled; preserved as opaque"});
    }
};

bool is_pass_through(std::string_view key) {
    return std::ranges::find(pass_through_fields(), key) != pass_through_fields().end();
}

std::string join_path(const std::string& prefix, std::string_view key) {
    return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

std::string index_path(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

const std::string& require_type(const json& obj, const std::string& where) {
    auto it = obj.find("type");
    if (it == obj.end() || !it->is_string()) throw MissingType(where.empty() ? "$" : where);
    return it->get_ref<const std::string&>();
}

/// Reads the properties of one JSON object into typed fields. A property that
/// is absent leaves its field untouched; a property whose value does not fit
/// the field's type goes verbatim into `extras` so nothing is lost.
class NodeReader {
public:
    NodeReader(const json& obj, Extras& extras, ReadContext& ctx, NodeClass cls,
               std::optional<std::string> element, std::string path)
        : obj_(obj), extras_(extras), ctx_(ctx), cls_(cls), element_(std::move(element)),
          path_(std::move(path)) {}

    const std::optional<std::string>& element() const { return element_; }
    void set_element(std::optional<std::string> id) { element_ = std::move(id); }

    void text(std::string_view key, std::string& out) {
        if (const json* v = take(key)) {
            if (const json* s = single(*v); s && s->is_string()) {
                out = s->get<std::string>();
            } else {
                keep(key, *v);
            }
        }
    }

    void text(std::string_view key, std::optional<std::string>& out) {
        if (const json* v = take(key)) {
            if (const json* s = single(*v); s && s->is_string()) {
                out = s->get<std::string>();
            } else {
                keep(key, *v);
            }
        }
    }

    void text_list(std::string_view key, std::vector<std::string>& out) {
        if (const json* v = take(key)) {
            if (v->is_string()) {
                out = {v->get<std::string>()};
            } else if (v->is_array() && all_strings(*v)) {
                out = v->get<std::vector<std::string>>();
            } else {
                keep(key, *v);
            }
        }
    }

    void timestamp(std::string_view key, std::optional<Timestamp>& out) {
        if (const json* v = take(key)) {
            const json* s = single(*v);
            std::optional<Timestamp> t;
            if (s && s->is_string()) t = Timestamp::try_parse(s->get_ref<const std::string&>());
            if (t) {
                out = t;
            } else {
                keep(key, *v);
            }
        }
    }

    template <class E>
    void enumeration(std::string_view key, std::optional<E>& out) {
        if (const json* v = take(key)) {
            const json* s = single(*v);
            std::optional<E> e;
            if (s && s->is_string()) e = try_parse_enum<E>(s->get_ref<const std::string&>());
            if (e) {
                out = e;
            } else {
                keep(key, *v);
            }
        }
    }

    template <class E>
    void enumeration_list(std::string_view key, std::vector<E>& out) {
        if (const json* v = take(key)) {
            std::vector<E> values;
            bool ok = v->is_string() || (v->is_array() && all_strings(*v));
            if (ok) {
                const json items = v->is_string() ? json::array({*v}) : *v;
                for (const auto& item : items) {
                    auto e = try_parse_enum<E>(item.get_ref<const std::string&>());
                    if (!e) {
                        ok = false;
                        break;
                    }
                    values.push_back(*e);
                }
            }
            if (ok) {
                out = std::move(values);
            } else {
                keep(key, *v);
            }
        }
    }

    void non_negative_integer(std::string_view key, std::optional<std::uint64_t>& out) {
        if (const json* v = take(key)) {
            const json* s = single(*v);
            if (s && s->is_number_unsigned()) {
                out = s->get<std::uint64_t>();
            } else if (s && s->is_number_integer() && s->get<std::int64_t>() >= 0) {
                out = static_cast<std::uint64_t>(s->get<std::int64_t>());
            } else {
                keep(key, *v);
            }
        }
    }

    void decimal(std::string_view key, std::optional<Decimal>& out) {
        if (const json* v = take(key)) {
            const json* s = single(*v);
            std::optional<Decimal> d;
            if (s && s->is_string()) {
                d = Decimal::try_parse(s->get_ref<const std::string&>());
            } else if (s && s->is_number()) {
                d = Decimal::try_parse(s->dump());
            }
            if (d) {
                out = std::move(d);
            } else {
                keep(key, *v);
            }
        }
    }

    void agents(std::string_view key, std::vector<Agent>& out);
    void dictionary(std::string_view key, std::vector<DictionaryEntry>& out);
    void energy_descriptions(std::string_view key, std::vector<EnergyConsumptionDescription>& out);
    void energy_consumption(std::string_view key, std::optional<EnergyConsumption>& out);
    void creation_info(std::string_view key, std::optional<CreationInfo>& out);

    /// Moves every property not consumed so far into `extras`.
    void finish() {
        for (const auto& [key, value] : obj_.items()) {
            if (key == "type" || consumed_.contains(key)) continue;
            if (!find_field(cls_, key) && !is_pass_through(key))
                ctx_.unknown_property(element_, join_path(path_, key));
            extras_[key] = value;
        }
    }

    std::string child_path(std::string_view key) const { return join_path(path_, key); }

private:
    const json* take(std::string_view key) {
        auto it = obj_.find(key);
        if (it == obj_.end()) return nullptr;
        consumed_.insert(std::string(key));
        return &*it;
    }

    /// A scalar, or the only member of a one-element array.
    static const json* single(const json& v) {
        if (v.is_array()) return v.size() == 1 ? &v.front() : nullptr;
        return &v;
    }

    static bool all_strings(const json& arr) {
        for (const auto& x : arr) {
            if (!x.is_string()) return false;
        }
        return true;
    }

    void keep(std::string_view key, const json& value) { extras_[std::string(key)] = value; }

    const json& obj_;
    Extras& extras_;
    ReadContext& ctx_;
    NodeClass cls_;
    std::optional<std::string> element_;
    std::string path_;
    std::set<std::string, std::less<>> consumed_;
};

void read_agent_object(const json& obj, Agent& a, ReadContext& ctx,
                       const std::optional<std::string>& element, const std::string& path) {
    a.kind = parse_enum<AgentKind>(require_type(obj, path));
    NodeReader r(obj, a.extras, ctx, NodeClass::agent, element, path);
    r.text("spdxId", a.spdx_id);
    r.text("name", a.name);
    r.text_list("externalIdentifier", a.external_identifiers);
    r.finish();
}

bool is_agent_tag(const json& v) {
    auto it = v.find("type");
    return it != v.end() && it->is_string() &&
           try_parse_enum<AgentKind>(it->get_ref<const std::string&>()).has_value();
}

void NodeReader::agents(std::string_view key, std::vector<Agent>& out) {
    const json* v = take(key);
    if (!v) return;
    const json items = v->is_array() ? *v : json::array({*v});
    const auto base = child_path(key);
    bool ok = true;
    for (const auto& item : items) {
        if (item.is_object()) {
            require_type(item, base);
            ok = ok && is_agent_tag(item);
        } else {
            ok = ok && item.is_string() && !item.get_ref<const std::string&>().empty();
        }
    }
    if (!ok) {
        keep(key, *v);
        return;
    }
    out.clear();
    out.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        Agent a;
        if (items[i].is_string()) {
            a.spdx_id = items[i].get<std::string>();
            if (auto it = ctx_.agent_kinds.find(*a.spdx_id); it != ctx_.agent_kinds.end())
                a.kind = it->second;
        } else {
            read_agent_object(items[i], a, ctx_, element_, index_path(base, i));
        }
        out.push_back(std::move(a));
    }
}

void NodeReader::dictionary(std::string_view key, std::vector<DictionaryEntry>& out) {
    const json* v = take(key);
    if (!v) return;
    const json items = v->is_array() ? *v : json::array({*v});
    const auto base = child_path(key);
    for (const auto& item : items) {
        if (!item.is_object() || require_type(item, base) != "DictionaryEntry") {
            keep(key, *v);
            return;
        }
    }
    out.clear();
    for (std::size_t i = 0; i < items.size(); ++i) {
        DictionaryEntry d;
        NodeReader r(items[i], d.extras, ctx_, NodeClass::dictionary_entry, element_,
                     index_path(base, i));
        r.text("key", d.key);
        r.text("value", d.value);
        r.finish();
        out.push_back(std::move(d));
    }
}

void NodeReader::energy_descriptions(std::string_view key,
                                     std::vector<EnergyConsumptionDescription>& out) {
    const json* v = take(key);
    if (!v) return;
    const json items = v->is_array() ? *v : json::array({*v});
    const auto base = child_path(key);
    for (const auto& item : items) {
        if (!item.is_object() ||
            require_type(item, base) != type_tag(NodeClass::energy_description)) {
            keep(key, *v);
            return;
        }
    }
    out.clear();
    for (std::size_t i = 0; i < items.size(); ++i) {
        EnergyConsumptionDescription d;
        NodeReader r(items[i], d.extras, ctx_, NodeClass::energy_description, element_,
                     index_path(base, i));
        r.decimal("ai_energyQuantity", d.energy_quantity);
        r.enumeration("ai_energyUnit", d.energy_unit);
        r.text("comment", d.comment);
        r.finish();
        out.push_back(std::move(d));
    }
}

void NodeReader::energy_consumption(std::string_view key, std::optional<EnergyConsumption>& out) {
    const json* v = take(key);
    if (!v) return;
    const json* s = single(*v);
    if (!s || !s->is_object() ||
        require_type(*s, child_path(key)) != type_tag(NodeClass::energy_consumption)) {
        keep(key, *v);
        return;
    }
    EnergyConsumption ec;
    NodeReader r(*s, ec.extras, ctx_, NodeClass::energy_consumption, element_, child_path(key));
    r.energy_descriptions("ai_trainingEnergyConsumption", ec.training);
    r.energy_descriptions("ai_finetuningEnergyConsumption", ec.finetuning);
    r.energy_descriptions("ai_inferenceEnergyConsumption", ec.inference);
    r.finish();
    out = std::move(ec);
}

void NodeReader::creation_info(std::string_view key, std::optional<CreationInfo>& out) {
    const json* v = take(key);
    if (!v) return;
    if (!v->is_object() || require_type(*v, child_path(key)) != type_tag(NodeClass::creation_info)) {
        keep(key, *v);
        return;
    }
    CreationInfo ci;
    NodeReader r(*v, ci.extras, ctx_, NodeClass::creation_info, element_, child_path(key));
    r.timestamp("created", ci.created);
    r.agents("createdBy", ci.created_by);
    r.finish();
    out = std::move(ci);
}

void read_core(NodeReader& r, PackageCore& c) {
    r.text("spdxId", c.spdx_id);
    r.set_element(c.spdx_id);
    r.text("name", c.name);
    r.text("packageVersion", c.package_version);
    r.timestamp("buildTime", c.build_time);
    r.timestamp("releaseTime", c.release_time);
    r.timestamp("validUntilTime", c.valid_until_time);
    r.text_list("downloadLocation", c.download_location);
    r.enumeration("primaryPurpose", c.primary_purpose);
    r.agents("suppliedBy", c.supplied_by);
    r.agents("originatedBy", c.originated_by);
    r.text("supportLevel", c.support_level);
    r.text("standardName", c.standard_name);
    r.text("comment", c.comment);
    r.text("description", c.description);
}

AIPackage read_ai_package(const json& obj, ReadContext& ctx) {
    AIPackage p;
    NodeReader r(obj, p.core.extras, ctx, NodeClass::ai_package, std::nullopt, "");
    read_core(r, p.core);
    r.enumeration("ai_autonomyType", p.autonomy_type);
    r.text("ai_domain", p.domain);
    r.energy_consumption("ai_energyConsumption", p.energy_consumption);
    r.dictionary("ai_hyperparameter", p.hyperparameter);
    r.text("ai_informationAboutTraining", p.information_about_training);
    r.text("ai_informationAboutApplication", p.information_about_application);
    r.text("ai_limitation", p.limitation);
    r.dictionary("ai_metric", p.metric);
    r.dictionary("ai_metricDecisionThreshold", p.metric_decision_threshold);
    r.text_list("ai_modelDataPreprocessing", p.model_data_preprocessing);
    r.text_list("ai_modelExplainability", p.model_explainability);
    r.enumeration("ai_safetyRiskAssessment", p.safety_risk_assessment);
    r.text_list("ai_standardCompliance", p.standard_compliance);
    r.text_list("ai_typeOfModel", p.type_of_model);
    r.enumeration("ai_useSensitivePersonalInformation", p.use_sensitive_personal_information);
    r.finish();
    return p;
}

DatasetPackage read_dataset_package(const json& obj, ReadContext& ctx) {
    DatasetPackage p;
    NodeReader r(obj, p.core.extras, ctx, NodeClass::dataset_package, std::nullopt, "");
    read_core(r, p.core);
    r.enumeration_list("dataset_datasetType", p.dataset_type);
    r.text("dataset_anonymizationMethodUsed", p.anonymization_method_used);
    r.enumeration("dataset_confidentialityLevel", p.confidentiality_level);
    r.text("dataset_dataCollectionProcess", p.data_collection_process);
    r.text("dataset_dataPreprocessing", p.data_preprocessing);
    r.enumeration("dataset_datasetAvailability", p.dataset_availability);
    r.text("dataset_datasetNoise", p.dataset_noise);
    r.non_negative_integer("dataset_datasetSize", p.dataset_size);
    r.text("dataset_datasetUpdateMechanism", p.dataset_update_mechanism);
    r.enumeration("dataset_hasSensitivePersonalInformation", p.has_sensitive_personal_information);
    r.text("dataset_intendedUse", p.intended_use);
    r.text("dataset_knownBias", p.known_bias);
    r.dictionary("dataset_sensor", p.sensor);
    r.finish();
    return p;
}

FileArtifact read_file(const json& obj, ReadContext& ctx) {
    FileArtifact f;
    NodeReader r(obj, f.extras, ctx, NodeClass::file, std::nullopt, "");
    r.text("spdxId", f.spdx_id);
    r.set_element(f.spdx_id);
    r.text("name", f.name);
    r.text("contentType", f.content_type);
    r.enumeration("primaryPurpose", f.primary_purpose);
    r.finish();
    return f;
}

LicenseElement read_license(const json& obj, ReadContext& ctx) {
    LicenseElement l;
    NodeReader r(obj, l.extras, ctx, NodeClass::license, std::nullopt, "");
    r.text("spdxId", l.spdx_id);
    r.set_element(l.spdx_id);
    r.text("simplelicensing_licenseExpression", l.expression);
    r.finish();
    return l;
}

std::optional<Relationship> read_relationship(const json& obj, ReadContext& ctx) {
    auto type_it = obj.find("relationshipType");
    if (type_it == obj.end() || !type_it->is_string()) return std::nullopt;
    const auto type = try_parse_enum<RelationshipType>(type_it->get_ref<const std::string&>());
    if (!type) return std::nullopt;

    Relationship rel;
    rel.type = *type;
    NodeReader r(obj, rel.extras, ctx, NodeClass::relationship, std::nullopt, "");
    std::optional<RelationshipType> ignored;
    r.enumeration("relationshipType", ignored);
    r.text("spdxId", rel.spdx_id);
    r.set_element(rel.spdx_id);
    r.text("from", rel.from);
    r.text_list("to", rel.to);
    r.text("description", rel.description);
    r.finish();
    return rel;
}

GenericElement read_generic(const json& obj, const std::string& tag) {
    GenericElement g;
    g.type_tag = tag;
    for (const auto& [key, value] : obj.items()) {
        if (key == "type") continue;
        if (key == "spdxId" && value.is_string()) {
            g.spdx_id = value.get<std::string>();
        } else {
            g.properties[key] = value;
        }
    }
    return g;
}

void read_document_node(const json& obj, SpdxDocument& doc, ReadContext& ctx) {
    NodeReader r(obj, doc.extras, ctx, NodeClass::document, std::nullopt, "");
    r.text("spdxId", doc.spdx_id);
    r.set_element(doc.spdx_id);
    r.text("name", doc.name);
    r.creation_info("creationInfo", doc.creation_info);
    r.text_list("profileConformance", doc.profile_conformance);
    r.text_list("rootElement", doc.root_elements);
    r.finish();
}

void read_graph_node(const json& node, std::size_t index, SpdxDocument& doc, ReadContext& ctx,
                     bool& seen_document_node) {
    const auto where = "@graph[" + std::to_string(index) + "]";
    if (!node.is_object()) throw SyntaxError("graph entry " + where + " is not an object");
    const std::string& tag = require_type(node, where);

    const auto cls = node_class_from_tag(tag);
    if (!cls) {
        auto g = read_generic(node, tag);
        ctx.unknown_type(g.spdx_id, "", tag);
        doc.add_element(std::move(g));
        return;
    }
    switch (*cls) {
        case NodeClass::document:
            if (!seen_document_node) {
                seen_document_node = true;
                read_document_node(node, doc, ctx);
                return;
            }
            break;
        case NodeClass::ai_package: doc.add_element(read_ai_package(node, ctx)); return;
        case NodeClass::dataset_package: doc.add_element(read_dataset_package(node, ctx)); return;
        case NodeClass::file: doc.add_element(read_file(node, ctx)); return;
        case NodeClass::license: doc.add_element(read_license(node, ctx)); return;
        case NodeClass::agent: {
            Agent a;
            read_agent_object(node, a, ctx, std::nullopt, "");
            doc.add_element(std::move(a));
            return;
        }
        case NodeClass::relationship:
            if (auto rel = read_relationship(node, ctx)) {
                doc.add_relationship(std::move(*rel));
                return;
            }
            // Missing or unknown relationshipType: kept verbatim for the validator.
            doc.add_element(read_generic(node, tag));
            return;
        default: break;
    }
    // Nested-only shapes (CreationInfo, DictionaryEntry, ...) or a second document node.
    auto g = read_generic(node, tag);
    ctx.unknown_type(g.spdx_id, "", tag);
    doc.add_element(std::move(g));
}

/// Agent nodes in the graph, so spdxId references can take the referenced kind.
void collect_agent_kinds(const json& graph, ReadContext& ctx) {
    for (const auto& node : graph) {
        if (!node.is_object()) continue;
        auto type = node.find("type");
        auto id = node.find("spdxId");
        if (type == node.end() || id == node.end() || !type->is_string() || !id->is_string())
            continue;
        if (auto kind = try_parse_enum<AgentKind>(type->get_ref<const std::string&>()))
            ctx.agent_kinds.emplace(id->get<std::string>(), *kind);
    }
}

// ===========================================================================
// Writing

void put_extras(json& node, const Extras& extras) {
    for (const auto& [key, value] : extras) node[key] = value;
}

void put(json& node, std::string_view key, const std::string& value) {
    if (!value.empty()) node[std::string(key)] = value;
}

void put(json& node, std::string_view key, const std::optional<std::string>& value) {
    if (value) node[std::string(key)] = *value;
}

void put(json& node, std::string_view key, const std::vector<std::string>& values) {
    if (!values.empty()) node[std::string(key)] = values;
}

void put(json& node, std::string_view key, const std::optional<Timestamp>& value) {
    if (value) node[std::string(key)] = value->to_string();
}

template <class E>
void put(json& node, std::string_view key, const std::optional<E>& value)
    requires requires { EnumTraits<E>::tokens; }
{
    if (value) node[std::string(key)] = std::string(to_token(*value));
}

template <class E>
void put(json& node, std::string_view key, const std::vector<E>& values)
    requires requires { EnumTraits<E>::tokens; }
{
    if (values.empty()) return;
    json arr = json::array();
    for (auto v : values) arr.push_back(std::string(to_token(v)));
    node[std::string(key)] = std::move(arr);
}

json agent_node(const Agent& a) {
    if (a.is_reference() && a.external_identifiers.empty() && a.extras.empty()) return *a.spdx_id;
    json node = json::object();
    put_extras(node, a.extras);
    node["type"] = std::string(to_token(a.kind));
    put(node, "spdxId", a.spdx_id);
    put(node, "name", a.name);
    put(node, "externalIdentifier", a.external_identifiers);
    return node;
}

void put(json& node, std::string_view key, const std::vector<Agent>& agents) {
    if (agents.empty()) return;
    json arr = json::array();
    for (const auto& a : agents) arr.push_back(agent_node(a));
    node[std::string(key)] = std::move(arr);
}

void put(json& node, std::string_view key, const std::vector<DictionaryEntry>& entries) {
    if (entries.empty()) return;
    json arr = json::array();
    for (const auto& d : entries) {
        json e = json::object();
        put_extras(e, d.extras);
        e["type"] = "DictionaryEntry";
        put(e, "key", d.key);
        put(e, "value", d.value);
        arr.push_back(std::move(e));
    }
    node[std::string(key)] = std::move(arr);
}

void put(json& node, std::string_view key,
         const std::vector<EnergyConsumptionDescription>& descriptions) {
    if (descriptions.empty()) return;
    json arr = json::array();
    for (const auto& d : descriptions) {
        json e = json::object();
        put_extras(e, d.extras);
        e["type"] = std::string(type_tag(NodeClass::energy_description));
        if (d.energy_quantity) e["ai_energyQuantity"] = d.energy_quantity->lexical();
        put(e, "ai_energyUnit", d.energy_unit);
        put(e, "comment", d.comment);
        arr.push_back(std::move(e));
    }
    node[std::string(key)] = std::move(arr);
}

void put(json& node, std::string_view key, const std::optional<EnergyConsumption>& ec) {
    if (!ec) return;
    json e = json::object();
    put_extras(e, ec->extras);
    e["type"] = std::string(type_tag(NodeClass::energy_consumption));
    put(e, "ai_trainingEnergyConsumption", ec->training);
    put(e, "ai_finetuningEnergyConsumption", ec->finetuning);
    put(e, "ai_inferenceEnergyConsumption", ec->inference);
    node[std::string(key)] = std::move(e);
}

void put_core(json& node, const PackageCore& c) {
    put_extras(node, c.extras);
    put(node, "spdxId", c.spdx_id);
    put(node, "name", c.name);
    put(node, "packageVersion", c.package_version);
    put(node, "buildTime", c.build_time);
    put(node, "releaseTime", c.release_time);
    put(node, "validUntilTime", c.valid_until_time);
    put(node, "downloadLocation", c.download_location);
    put(node, "primaryPurpose", c.primary_purpose);
    put(node, "suppliedBy", c.supplied_by);
    put(node, "originatedBy", c.originated_by);
    put(node, "supportLevel", c.support_level);
    put(node, "standardName", c.standard_name);
    put(node, "comment", c.comment);
    put(node, "description", c.description);
}

struct NodeWriter {
    json operator()(const AIPackage& p) const {
        json n = json::object();
        put_core(n, p.core);
        n["type"] = std::string(type_tag(NodeClass::ai_package));
        put(n, "ai_autonomyType", p.autonomy_type);
        put(n, "ai_domain", p.domain);
        put(n, "ai_energyConsumption", p.energy_consumption);
        put(n, "ai_hyperparameter", p.hyperparameter);
        put(n, "ai_informationAboutTraining", p.information_about_training);
        put(n, "ai_informationAboutApplication", p.information_about_application);
        put(n, "ai_limitation", p.limitation);
        put(n, "ai_metric", p.metric);
        put(n, "ai_metricDecisionThreshold", p.metric_decision_threshold);
        put(n, "ai_modelDataPreprocessing", p.model_data_preprocessing);
        put(n, "ai_modelExplainability", p.model_explainability);
        put(n, "ai_safetyRiskAssessment", p.safety_risk_assessment);
        put(n, "ai_standardCompliance", p.standard_compliance);
        put(n, "ai_typeOfModel", p.type_of_model);
        put(n, "ai_useSensitivePersonalInformation", p.use_sensitive_personal_information);
        return n;
    }

    json operator()(const DatasetPackage& p) const {
        json n = json::object();
        put_core(n, p.core);
        n["type"] = std::string(type_tag(NodeClass::dataset_package));
        put(n, "dataset_datasetType", p.dataset_type);
        put(n, "dataset_anonymizationMethodUsed", p.anonymization_method_used);
        put(n, "dataset_confidentialityLevel", p.confidentiality_level);
        put(n, "dataset_dataCollectionProcess", p.data_collection_process);
        put(n, "dataset_dataPreprocessing", p.data_preprocessing);
        put(n, "dataset_datasetAvailability", p.dataset_availability);
        put(n, "dataset_datasetNoise", p.dataset_noise);
        if (p.dataset_size) n["dataset_datasetSize"] = *p.dataset_size;
        put(n, "dataset_datasetUpdateMechanism", p.dataset_update_mechanism);
        put(n, "dataset_hasSensitivePersonalInformation", p.has_sensitive_personal_information);
        put(n, "dataset_intendedUse", p.intended_use);
        put(n, "dataset_knownBias", p.known_bias);
        put(n, "dataset_sensor", p.sensor);
        return n;
    }

    json operator()(const FileArtifact& f) const {
        json n = json::object();
        put_extras(n, f.extras);
        n["type"] = std::string(type_tag(NodeClass::file));
        put(n, "spdxId", f.spdx_id);
        put(n, "name", f.name);
        put(n, "contentType", f.content_type);
        put(n, "primaryPurpose", f.primary_purpose);
        return n;
    }

    json operator()(const Agent& a) const {
        json n = json::object();
        put_extras(n, a.extras);
        n["type"] = std::string(to_token(a.kind));
        put(n, "spdxId", a.spdx_id);
        put(n, "name", a.name);
        put(n, "externalIdentifier", a.external_identifiers);
        return n;
    }

    json operator()(const LicenseElement& l) const {
        json n = json::object();
        put_extras(n, l.extras);
        n["type"] = std::string(type_tag(NodeClass::license));
        put(n, "spdxId", l.spdx_id);
        put(n, "simplelicensing_licenseExpression", l.expression);
        return n;
    }

    json operator()(const GenericElement& g) const {
        json n = json::object();
        put_extras(n, g.properties);
        n["type"] = g.type_tag;
        put(n, "spdxId", g.spdx_id);
        return n;
    }
};

// ---------------------------------------------------------------------------
// Canonical printer

void emit(const json& v, int indent, std::string& out);

void emit_indent(int n, std::string& out) { out.append(static_cast<std::size_t>(n), ' '); }

void emit_member(const std::string& key, const json& value, int indent, bool& first,
                 std::string& out) {
    if (!first) out += ",\n";
    first = false;
    emit_indent(indent, out);
    out += json(key).dump();
    out += ": ";
    emit(value, indent, out);
}

void emit(const json& v, int indent, std::string& out) {
    if (v.is_object()) {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const char* lead : {"type", "spdxId"}) {
            if (auto it = v.find(lead); it != v.end()) emit_member(lead, *it, indent + 2, first, out);
        }
        for (const auto& [key, value] : v.items()) {
            if (key == "type" || key == "spdxId") continue;
            emit_member(key, value, indent + 2, first, out);
        }
        out += "\n";
        emit_indent(indent, out);
        out += "}";
    } else if (v.is_array()) {
        if (v.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",\n";
            emit_indent(indent + 2, out);
            emit(v[i], indent + 2, out);
        }
        out += "\n";
        emit_indent(indent, out);
        out += "]";
    } else {
        out += v.dump();
    }
}

}  // namespace

// ===========================================================================

ReadResult read_document(std::string_view bytes) {
    json root;
    try {
        root = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw SyntaxError(e.what());
    }

    ReadResult result;
    SpdxDocument& doc = result.document;
    ReadContext ctx;

    const json* graph = nullptr;
    json single_node;
    if (root.is_object() && root.contains("@graph")) {
        graph = &root["@graph"];
        if (!graph->is_array()) throw SyntaxError("\"@graph\" must be an array");
        if (auto it = root.find("@context"); it != root.end()) doc.context = *it;
        for (const auto& [key, value] : root.items()) {
            if (key == "@context" || key == "@graph") continue;
            doc.envelope[key] = value;
            ctx.unknown_property(std::nullopt, key);
        }
    } else if (root.is_object()) {
        require_type(root, "");
        single_node = json::array({root});
        graph = &single_node;
    } else if (root.is_array()) {
        graph = &root;
    } else {
        throw SyntaxError("top-level value must be an object or an array");
    }

    collect_agent_kinds(*graph, ctx);
    bool seen_document_node = false;
    for (std::size_t i = 0; i < graph->size(); ++i) {
        read_graph_node((*graph)[i], i, doc, ctx, seen_document_node);
    }
    result.diagnostics = std::move(ctx.diagnostics);
    return result;
}

json to_node(const Element& e) { return std::visit(NodeWriter{}, e); }

json to_node(const Relationship& r) {
    json n = json::object();
    put_extras(n, r.extras);
    n["type"] = std::string(type_tag(NodeClass::relationship));
    put(n, "spdxId", r.spdx_id);
    n["relationshipType"] = std::string(to_token(r.type));
    put(n, "from", r.from);
    if (!r.to.empty() || !r.extras.contains("to")) n["to"] = r.to;
    put(n, "description", r.description);
    return n;
}

json document_node(const SpdxDocument& doc) {
    json n = json::object();
    put_extras(n, doc.extras);
    n["type"] = std::string(type_tag(NodeClass::document));
    put(n, "spdxId", doc.spdx_id);
    put(n, "name", doc.name);
    if (doc.creation_info) {
        const auto& ci = *doc.creation_info;
        json c = json::object();
        put_extras(c, ci.extras);
        c["type"] = std::string(type_tag(NodeClass::creation_info));
        put(c, "created", ci.created);
        put(c, "createdBy", ci.created_by);
        n["creationInfo"] = std::move(c);
    }
    put(n, "profileConformance", doc.profile_conformance);
    put(n, "rootElement", doc.root_elements);
    return n;
}

std::string dump_canonical(const json& value) {
    std::string out;
    emit(value, 0, out);
    out += "\n";
    return out;
}

std::string write_document(const SpdxDocument& doc) {
    json root = json::object();
    put_extras(root, doc.envelope);
    root["@context"] = doc.context;
    json graph = json::array();
    if (doc.has_document_node()) graph.push_back(document_node(doc));
    for (const auto& e : doc.elements()) graph.push_back(to_node(e));
    for (const auto& r : doc.relationships()) graph.push_back(to_node(r));
    root["@graph"] = std::move(graph);
    return dump_canonical(root);
}

std::string canonicalize(std::string_view bytes) { return write_document(read_document(bytes).document); }

}  // namespace aibomkit
