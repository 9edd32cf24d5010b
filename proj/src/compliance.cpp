#include "aibomkit/compliance.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "aibomkit/embedded.hpp"
#include "aibomkit/schema.hpp"
#include "aibomkit/serialization.hpp"

namespace aibomkit {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::string_view kJsonSuffix = ".json";

std::optional<fs::path> framework_dir() {
    const char* dir = std::getenv(kFrameworkDirEnv);
    if (!dir || !*dir) return std::nullopt;
    return fs::path(dir);
}

bool non_empty(const json& v) {
    if (v.is_null()) return false;
    if (v.is_string()) return !v.get_ref<const std::string&>().empty();
    if (v.is_array() || v.is_object()) return !v.empty();
    return true;
}

std::string child(const std::string& base, std::string_view key) {
    return base.empty() ? std::string(key) : base + "." + std::string(key);
}

/// Calls `visit(object, key, value, path)` for every property of every object in `v`.
template <class Visit>
void walk(const json& v, const std::string& path, Visit&& visit) {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (key == "type") continue;
            const auto p = child(path, key);
            visit(v, key, value, p);
            walk(value, p, visit);
        }
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            walk(v[i], path + "[" + std::to_string(i) + "]", visit);
    }
}

struct Scope {
    /// Empty for plain selectors; "Agent" or an agent kind otherwise.
    std::string_view owner;
    std::string_view field;
};

Scope parse_scope(std::string_view selector) {
    for (std::string_view owner : {"Agent", "Organization", "Person", "Tool"}) {
        if (selector.size() > owner.size() + 1 && selector.starts_with(owner) &&
            selector[owner.size()] == '.')
            return {owner, selector.substr(owner.size() + 1)};
    }
    return {{}, selector};
}

bool owner_matches(const json& obj, std::string_view owner) {
    auto it = obj.find("type");
    if (it == obj.end() || !it->is_string()) return false;
    const auto& tag = it->get_ref<const std::string&>();
    if (owner == "Agent") return try_parse_enum<AgentKind>(tag).has_value();
    return tag == owner;
}

void search_node(const json& node, const std::optional<std::string>& id, const Scope& scope,
                 std::vector<Evidence>& out) {
    walk(node, "", [&](const json& obj, const std::string& key, const json& value, const std::string& path) {
        if (!non_empty(value)) return;
        if (key != scope.field && strip_profile_prefix(key) != scope.field) return;
        if (!scope.owner.empty() && !owner_matches(obj, scope.owner)) return;
        out.push_back({id, path});
    });
}

std::string escape_cell(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

std::string join_strings(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string describe_evidence(const Evidence& e) {
    return e.element_id ? *e.element_id + "#" + e.path : e.path;
}

}  // namespace

Framework framework_from_json(const json& j) {
    try {
        Framework fw;
        fw.id = j.at("id").get<std::string>();
        fw.name = j.at("name").get<std::string>();
        std::set<std::string> seen;
        for (const auto& r : j.at("requirements")) {
            Requirement req;
            req.id = r.at("id").get<std::string>();
            req.citation = r.value("citation", "");
            req.description = r.value("description", "");
            req.mapped_paths = r.value("mappedPaths", std::vector<std::string>{});
            req.mappable = r.value("mappable", true);
            req.rationale = r.value("rationale", "");
            if (!seen.insert(req.id).second)
                throw Error("framework '" + fw.id + "': duplicate requirement id '" + req.id + "'");
            if (!req.mappable && !req.mapped_paths.empty())
                throw Error("framework '" + fw.id + "': requirement '" + req.id +
                            "' is not mappable but lists mapped paths");
            fw.requirements.push_back(std::move(req));
        }
        return fw;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed framework: ") + e.what());
    }
}

json framework_to_json(const Framework& fw) {
    json reqs = json::array();
    for (const auto& r : fw.requirements) {
        json node = {{"id", r.id},
                     {"citation", r.citation},
                     {"description", r.description},
                     {"mappedPaths", r.mapped_paths},
                     {"mappable", r.mappable}};
        if (!r.rationale.empty()) node["rationale"] = r.rationale;
        reqs.push_back(std::move(node));
    }
    return {{"id", fw.id}, {"name", fw.name}, {"requirements", std::move(reqs)}};
}

std::vector<std::string> framework_ids() {
    std::vector<std::string> ids;
    if (auto dir = framework_dir()) {
        std::error_code ec;
        for (const auto& entry : fs::directory_iterator(*dir, ec)) {
            if (entry.path().extension() == kJsonSuffix) ids.push_back(entry.path().stem().string());
        }
    } else {
        for (const auto& f : detail::embedded_frameworks()) {
            std::string_view name = f.name;
            if (name.ends_with(kJsonSuffix)) name.remove_suffix(kJsonSuffix.size());
            ids.emplace_back(name);
        }
    }
    std::ranges::sort(ids);
    return ids;
}

Framework load_framework(std::string_view id) {
    const std::string file = std::string(id) + std::string(kJsonSuffix);
    std::string text;
    if (auto dir = framework_dir()) {
        std::ifstream in(*dir / file, std::ios::binary);
        if (!in) throw UnknownFramework(std::string(id));
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        auto files = detail::embedded_frameworks();
        auto it = std::ranges::find(files, std::string_view(file), &detail::EmbeddedFile::name);
        if (it == files.end()) throw UnknownFramework(std::string(id));
        text = it->content;
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("framework '" + std::string(id) + "' is not valid JSON");
    return framework_from_json(j);
}

bool is_valid_selector(std::string_view selector) {
    if (selector.starts_with("relationship:"))
        return try_parse_enum<RelationshipType>(selector.substr(13)).has_value();
    if (selector.starts_with("profile:")) {
        auto p = selector.substr(8);
        return p == "ai" || p == "dataset";
    }
    const auto scope = parse_scope(selector);
    if (!scope.owner.empty()) {
        return find_field(NodeClass::agent, scope.field) != nullptr ||
               std::ranges::find(pass_through_fields(), scope.field) != pass_through_fields().end();
    }
    return !selector.empty() && is_known_field_name(strip_profile_prefix(selector));
}

std::string_view to_string(CoverageStatus s) noexcept {
    switch (s) {
        case CoverageStatus::satisfied: return "satisfied";
        case CoverageStatus::partial: return "partial";
        case CoverageStatus::missing: return "missing";
        case CoverageStatus::not_mappable: return "notMappable";
    }
    return {};
}

CoverageCounts CoverageReport::counts() const noexcept {
    CoverageCounts c;
    for (const auto& e : entries) {
        switch (e.status) {
            case CoverageStatus::satisfied: ++c.satisfied; break;
            case CoverageStatus::partial: ++c.partial; break;
            case CoverageStatus::missing: ++c.missing; break;
            case CoverageStatus::not_mappable: ++c.not_mappable; break;
        }
    }
    return c;
}

std::vector<Evidence> find_evidence(const SpdxDocument& doc, std::string_view selector) {
    std::vector<Evidence> out;
    if (selector.starts_with("relationship:")) {
        const auto type = try_parse_enum<RelationshipType>(selector.substr(13));
        if (!type) return out;
        for (const auto& r : doc.relationships()) {
            if (r.type == *type) out.push_back({r.from.empty() ? r.spdx_id : r.from, std::string(selector)});
        }
        return out;
    }
    if (selector.starts_with("profile:")) {
        const auto profile = selector.substr(8);
        for (const auto& e : doc.elements()) {
            if ((profile == "ai" && std::holds_alternative<AIPackage>(e)) ||
                (profile == "dataset" && std::holds_alternative<DatasetPackage>(e)))
                out.push_back({element_id(e), "type"});
        }
        return out;
    }
    const auto scope = parse_scope(selector);
    search_node(document_node(doc), doc.spdx_id, scope, out);
    for (const auto& e : doc.elements()) search_node(to_node(e), element_id(e), scope, out);
    for (const auto& r : doc.relationships()) search_node(to_node(r), r.spdx_id, scope, out);
    return out;
}

CoverageReport assess(const SpdxDocument& doc, const Framework& fw) {
    CoverageReport report{fw.id, fw.name, {}};
    for (const auto& req : fw.requirements) {
        CoverageEntry entry{req.id, req.citation, req.description, CoverageStatus::missing, {}, {}, req.rationale};
        if (!req.mappable) {
            entry.status = CoverageStatus::not_mappable;
            report.entries.push_back(std::move(entry));
            continue;
        }
        std::size_t found = 0;
        for (const auto& path : req.mapped_paths) {
            auto ev = find_evidence(doc, path);
            if (ev.empty()) {
                entry.missing_paths.push_back(path);
            } else {
                ++found;
                entry.evidence.insert(entry.evidence.end(), ev.begin(), ev.end());
            }
        }
        if (found == req.mapped_paths.size() && found > 0) {
            entry.status = CoverageStatus::satisfied;
        } else if (found > 0) {
            entry.status = CoverageStatus::partial;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept {
    if (name == "text") return ReportFormat::text;
    if (name == "json") return ReportFormat::json;
    if (name == "markdown" || name == "md") return ReportFormat::markdown;
    return std::nullopt;
}

json report_to_json(const CoverageReport& report) {
    const auto c = report.counts();
    json entries = json::array();
    for (const auto& e : report.entries) {
        json evidence = json::array();
        for (const auto& ev : e.evidence)
            evidence.push_back({{"elementId", ev.element_id ? json(*ev.element_id) : json(nullptr)}, {"path", ev.path}});
        json node = {{"requirementId", e.requirement_id},
                     {"citation", e.citation},
                     {"description", e.description},
                     {"status", std::string(to_string(e.status))},
                     {"evidence", std::move(evidence)},
                     {"missingPaths", e.missing_paths}};
        if (!e.rationale.empty()) node["rationale"] = e.rationale;
        entries.push_back(std::move(node));
    }
    return {{"frameworkId", report.framework_id},
            {"frameworkName", report.framework_name},
            {"summary",
             {{"satisfied", c.satisfied},
              {"partial", c.partial},
              {"missing", c.missing},
              {"notMappable", c.not_mappable},
              {"total", c.total()}}},
            {"entries", std::move(entries)}};
}

std::string render_report(const CoverageReport& report, ReportFormat format) {
    const auto c = report.counts();
    const std::string summary = "satisfied: " + std::to_string(c.satisfied) + "/" + std::to_string(c.mappable()) +
                                " mappable";
    const std::string tally = "partial: " + std::to_string(c.partial) + ", missing: " + std::to_string(c.missing) +
                              ", notMappable: " + std::to_string(c.not_mappable) +
                              ", total: " + std::to_string(c.total());
    switch (format) {
        case ReportFormat::json: return dump_canonical(report_to_json(report));
        case ReportFormat::text: {
            std::string out = report.framework_name + " (" + report.framework_id + ")\n";
            for (const auto& e : report.entries) {
                std::string status(to_string(e.status));
                status.resize(std::max<std::size_t>(status.size(), 12), ' ');
                out += "  " + status + " " + e.requirement_id + "  " + e.description;
                if (!e.missing_paths.empty()) out += "  [missing: " + join_strings(e.missing_paths, ", ") + "]";
                out += '\n';
            }
            out += summary + "\n" + tally + "\n";
            return out;
        }
        case ReportFormat::markdown: {
            std::string out = "# " + report.framework_name + " coverage\n\n";
            out += "Framework `" + report.framework_id + "`. **" + summary + "**; " + tally + ".\n\n";
            out += "| Requirement | Citation | Status | Evidence / notes |\n";
            out += "|---|---|---|---|\n";
            for (const auto& e : report.entries) {
                std::string notes;
                if (e.status == CoverageStatus::not_mappable) {
                    notes = e.rationale;
                } else {
                    std::vector<std::string> found;
                    for (const auto& ev : e.evidence) found.push_back("`" + describe_evidence(ev) + "`");
                    notes = join_strings(found, ", ");
                    if (!e.missing_paths.empty()) {
                        if (!notes.empty()) notes += "; ";
                        notes += "missing: " + join_strings(e.missing_paths, ", ");
                    }
                }
                out += "| " + escape_cell(e.requirement_id + ": " + e.description) + " | " +
                       escape_cell(e.citation) + " | " + std::string(to_string(e.status)) + " | " +
                       escape_cell(notes) + " |\n";
            }
            return out;
        }
    }
    return {};
}

}  // namespace aibomkit
