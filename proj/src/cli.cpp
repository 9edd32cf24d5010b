#include "aibomkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "aibomkit/compliance.hpp"
#include "aibomkit/serialization.hpp"
#include "aibomkit/validator.hpp"

namespace aibomkit {

using nlohmann::json;

namespace {

constexpr std::string_view kScaffoldBase = "https://example.invalid/spdxdocs/";
constexpr std::string_view kNoAssertionLicense =
    "https://spdx.org/rdf/3.0.1/terms/Licensing/NoAssertionLicense";

/// Raised for unreadable or unwritable files; maps to kExitError.
struct IoFailure : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoFailure("cannot read '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot write '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoFailure("cannot write '" + path + "'");
}

std::string pad(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.resize(width, ' ');
    return out;
}

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
    return out;
}

Agent placeholder_agent(AgentKind kind, std::string name) {
    Agent a;
    a.kind = kind;
    a.name = std::move(name);
    return a;
}

struct Options {
    std::string file;
    std::string profile = "auto";
    std::string output = "text";
    std::string framework;
    std::string fail_on = "missing";
    std::string element;
    std::string kind;
    std::string out_path;
    bool in_place = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
    const auto result = read_document(read_file(o.file));
    ProfileSet profiles = o.profile == "auto" ? ProfileSet::from_document(result.document)
                                              : ProfileSet::from_tokens(std::vector<std::string>{o.profile});
    const auto diagnostics = validate_document(result.document, profiles);
    if (o.output == "json") {
        out << dump_canonical(diagnostics_to_json(diagnostics));
    } else {
        out << render_diagnostics_text(diagnostics);
    }
    return verdict(diagnostics) == Verdict::non_conformant ? kExitFindings : kExitOk;
}

int cmd_report(const Options& o, std::ostream& out) {
    const auto framework = load_framework(o.framework);
    const auto doc = read_document(read_file(o.file)).document;
    const auto report = assess(doc, framework);
    out << render_report(report, *parse_report_format(o.output));
    const auto c = report.counts();
    if (o.fail_on == "missing" && c.missing > 0) return kExitFindings;
    if (o.fail_on == "partial" && (c.missing > 0 || c.partial > 0)) return kExitFindings;
    return kExitOk;
}

json relationship_summary(const Relationship& r) {
    return {{"spdxId", r.spdx_id ? json(*r.spdx_id) : json(nullptr)},
            {"relationshipType", std::string(to_token(r.type))},
            {"from", r.from},
            {"to", r.to}};
}

int cmd_inspect(const Options& o, std::ostream& out, std::ostream& err) {
    const auto doc = read_document(read_file(o.file)).document;
    if (!o.element.empty()) {
        json node;
        if (const Element* e = doc.find(o.element)) {
            node = to_node(*e);
        } else if (doc.spdx_id == o.element) {
            node = document_node(doc);
        } else {
            for (const auto& r : doc.relationships()) {
                if (r.spdx_id == o.element) node = to_node(r);
            }
        }
        if (node.is_null()) {
            err << "aibomkit: no element '" << o.element << "'\n";
            return kExitFindings;
        }
        out << dump_canonical(node);
        return kExitOk;
    }

    if (o.output == "json") {
        json elements = json::array();
        for (const auto& e : doc.elements()) {
            const auto& id = element_id(e);
            elements.push_back({{"spdxId", id ? json(*id) : json(nullptr)},
                                {"kind", std::string(element_kind(e))},
                                {"name", std::string(element_name(e))}});
        }
        json relationships = json::array();
        for (const auto& r : doc.relationships()) relationships.push_back(relationship_summary(r));
        out << dump_canonical({{"elements", std::move(elements)}, {"relationships", std::move(relationships)}});
        return kExitOk;
    }

    std::size_t id_width = 2;
    for (const auto& e : doc.elements()) id_width = std::max(id_width, element_id(e).value_or("-").size());
    out << "Elements (" << doc.elements().size() << ")\n";
    out << "  " << pad("ID", id_width) << "  " << pad("KIND", 16) << "  NAME\n";
    for (const auto& e : doc.elements()) {
        out << "  " << pad(element_id(e).value_or("-"), id_width) << "  " << pad(element_kind(e), 16) << "  "
            << element_name(e) << '\n';
    }
    out << "Relationships (" << doc.relationships().size() << ")\n";
    for (const auto& r : doc.relationships()) {
        out << "  " << r.from << " " << to_token(r.type) << " [" << join_list(r.to) << "]\n";
    }
    return kExitOk;
}

int cmd_scaffold(const Options& o, std::ostream& out) {
    const auto bytes = write_document(scaffold_document(o.kind));
    if (o.out_path.empty() || o.out_path == "-") {
        out << bytes;
    } else {
        write_file(o.out_path, bytes);
    }
    return kExitOk;
}

int cmd_canonicalize(const Options& o, std::ostream& out) {
    const auto bytes = canonicalize(read_file(o.file));
    if (o.in_place) {
        write_file(o.file, bytes);
    } else {
        out << bytes;
    }
    return kExitOk;
}

}  // namespace

SpdxDocument scaffold_document(std::string_view kind) {
    if (kind != "ai" && kind != "dataset") throw Error("unknown scaffold kind '" + std::string(kind) + "'");
    const bool ai = kind == "ai";
    const std::string base = std::string(kScaffoldBase) + (ai ? "ai-package" : "dataset-package") + "/";
    const Timestamp now(std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));

    PackageCore core;
    core.spdx_id = base + (ai ? "model" : "dataset");
    core.name = ai ? "PLACEHOLDER model name" : "PLACEHOLDER dataset name";
    core.package_version = "PLACEHOLDER version";
    core.build_time = now;
    core.release_time = now;
    core.download_location = {base + "download"};
    core.primary_purpose = ai ? SoftwarePurpose::model : SoftwarePurpose::data;
    core.supplied_by = {placeholder_agent(AgentKind::organization, "PLACEHOLDER supplier")};

    SpdxDocument doc;
    doc.spdx_id = base + "document";
    doc.name = ai ? "AI package BOM template" : "Dataset package BOM template";
    CreationInfo ci;
    ci.created = now;
    ci.created_by = {placeholder_agent(AgentKind::tool, "aibomkit")};
    doc.creation_info = std::move(ci);
    doc.profile_conformance = {"core", "software", ai ? "ai" : "dataset"};
    doc.root_elements = {*core.spdx_id};

    const std::string id = *core.spdx_id;
    if (ai) {
        AIPackage p;
        p.core = std::move(core);
        doc.add_element(std::move(p));
    } else {
        DatasetPackage p;
        p.core = std::move(core);
        p.core.originated_by = {placeholder_agent(AgentKind::organization, "PLACEHOLDER originator")};
        p.dataset_type = {DatasetType::no_assertion};
        doc.add_element(std::move(p));
    }
    for (auto [type, suffix] : {std::pair{RelationshipType::has_concluded_license, "concluded-license"},
                                std::pair{RelationshipType::has_declared_license, "declared-license"}}) {
        Relationship r;
        r.spdx_id = base + suffix;
        r.type = type;
        r.from = id;
        r.to = {std::string(kNoAssertionLicense)};
        doc.add_relationship(std::move(r));
    }
    return doc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"AI and dataset bill-of-materials toolkit", "aibomkit"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "Check a document against the AI and Dataset profiles");
    validate->add_option("file", o.file, "Document to validate")->required();
    validate->add_option("--profile", o.profile, "Profiles to check")
        ->check(CLI::IsMember({"ai", "dataset", "auto"}))
        ->capture_default_str();
    validate->add_option("--output", o.output, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* report = app.add_subcommand("report", "Regulatory coverage report");
    report->add_option("file", o.file, "Document to assess")->required();
    report->add_option("--framework", o.framework, "Framework id (" + join_list(framework_ids()) + ")")
        ->required();
    report->add_option("--output", o.output, "Output format")
        ->check(CLI::IsMember({"text", "json", "markdown"}))
        ->capture_default_str();
    report->add_option("--fail-on", o.fail_on, "Exit 1 when any requirement is at or below this status")
        ->check(CLI::IsMember({"never", "missing", "partial"}))
        ->capture_default_str();

    auto* inspect = app.add_subcommand("inspect", "List elements and relationships, or show one element");
    inspect->add_option("file", o.file, "Document to inspect")->required();
    inspect->add_option("element", o.element, "spdxId of one element to show");
    inspect->add_option("--output", o.output, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* scaffold = app.add_subcommand("scaffold", "Write a template document");
    scaffold->add_option("kind", o.kind, "Package profile")->required()->check(CLI::IsMember({"ai", "dataset"}));
    scaffold->add_option("out", o.out_path, "Output file ('-' for standard output)");

    auto* canon = app.add_subcommand("canonicalize", "Rewrite a document in canonical form");
    canon->add_option("file", o.file, "Document to canonicalize")->required();
    canon->add_flag("--in-place", o.in_place, "Overwrite the input file");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out);
        if (report->parsed()) return cmd_report(o, out);
        if (inspect->parsed()) return cmd_inspect(o, out, err);
        if (scaffold->parsed()) return cmd_scaffold(o, out);
        if (canon->parsed()) return cmd_canonicalize(o, out);
    } catch (const Error& e) {
        err << "aibomkit: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace aibomkit
