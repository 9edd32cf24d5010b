#include "support.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

namespace testkit {

using nlohmann::json;
using nlohmann::ordered_json;

const std::vector<MandatoryRow>& mandatory_rows() {
    static const std::vector<MandatoryRow> rows{
        {"ai_AIPackage", "buildTime"},
        {"ai_AIPackage", "downloadLocation"},
        {"ai_AIPackage", "name"},
        {"ai_AIPackage", "packageVersion"},
        {"ai_AIPackage", "primaryPurpose"},
        {"ai_AIPackage", "releaseTime"},
        {"ai_AIPackage", "spdxId"},
        {"ai_AIPackage", "suppliedBy"},
        {"ai_AIPackage", "relationship:hasConcludedLicense"},
        {"ai_AIPackage", "relationship:hasDeclaredLicense"},
        {"dataset_DatasetPackage", "buildTime"},
        {"dataset_DatasetPackage", "dataset_datasetType"},
        {"dataset_DatasetPackage", "downloadLocation"},
        {"dataset_DatasetPackage", "originatedBy"},
        {"dataset_DatasetPackage", "packageVersion"},
        {"dataset_DatasetPackage", "primaryPurpose"},
        {"dataset_DatasetPackage", "name"},
        {"dataset_DatasetPackage", "releaseTime"},
        {"dataset_DatasetPackage", "spdxId"},
        {"dataset_DatasetPackage", "relationship:hasConcludedLicense"},
        {"dataset_DatasetPackage", "relationship:hasDeclaredLicense"},
    };
    return rows;
}

nlohmann::json* find_node(json& doc, std::string_view id) {
    for (auto& node : doc["@graph"]) {
        if (node.value("spdxId", "") == id) return &node;
    }
    return nullptr;
}

std::vector<Mutation> mandatory_deletions(std::string_view fixture_bytes) {
    const json doc = json::parse(fixture_bytes);
    std::vector<Mutation> out;
    for (const auto& node : doc["@graph"]) {
        const std::string type = node.value("type", "");
        const std::string id = node.value("spdxId", "");
        for (const auto& row : mandatory_rows()) {
            if (row.package_type != type || row.field == "spdxId") continue;
            json mutated = doc;
            if (row.field.starts_with("relationship:")) {
                const auto rel = row.field.substr(std::string_view("relationship:").size());
                auto& graph = mutated["@graph"];
                graph.erase(std::remove_if(graph.begin(), graph.end(),
                                           [&](const json& n) {
                                               return n.value("type", "") == "Relationship" &&
                                                      n.value("relationshipType", "") == rel &&
                                                      n.value("from", "") == id;
                                           }),
                            graph.end());
            } else {
                find_node(mutated, id)->erase(std::string(row.field));
            }
            out.push_back({type, id, std::string(row.field), mutated.dump(2)});
        }
    }
    return out;
}

namespace {

ordered_json shuffled(const json& j, std::mt19937_64& rng) {
    if (j.is_object()) {
        std::vector<std::string> keys;
        for (const auto& [k, v] : j.items()) keys.push_back(k);
        std::shuffle(keys.begin(), keys.end(), rng);
        ordered_json out = ordered_json::object();
        for (const auto& k : keys) out[k] = shuffled(j.at(k), rng);
        return out;
    }
    if (j.is_array()) {
        ordered_json out = ordered_json::array();
        for (const auto& v : j) out.push_back(shuffled(v, rng));
        return out;
    }
    return ordered_json::parse(j.dump());
}

}  // namespace

std::string shuffle_keys(std::string_view bytes, std::mt19937_64& rng) {
    return shuffled(json::parse(bytes), rng).dump(1, '\t');
}

aibomkit::EnergyConsumption random_energy(std::mt19937_64& rng) {
    using namespace aibomkit;
    std::uniform_int_distribution<int> count(0, 3);
    std::bernoulli_distribution keep(0.85);
    std::uniform_int_distribution<int> unit(0, 2);
    std::uniform_int_distribution<int> milli(0, 100000);
    EnergyConsumption e;
    for (auto* list : {&e.training, &e.finetuning, &e.inference}) {
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            EnergyConsumptionDescription d;
            if (keep(rng)) d.energy_quantity = Decimal::parse(std::to_string(milli(rng)) + ".001");
            if (keep(rng)) d.energy_unit = static_cast<EnergyUnit>(unit(rng));
            list->push_back(std::move(d));
        }
    }
    return e;
}

bool energy_incomplete(const aibomkit::EnergyConsumption& e) {
    for (const auto* list : {&e.training, &e.finetuning, &e.inference}) {
        for (const auto& d : *list) {
            if (!d.energy_quantity || !d.energy_unit) return true;
        }
    }
    return false;
}

std::string civil_timestamp(long long seconds) {
    // Days-from-civil inverse, proleptic Gregorian calendar.
    long long days = seconds / 86400;
    long long rem = seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    const long long z = days + 719468;
    const long long era = (z >= 0 ? z : z - 146096) / 146097;
    const long long doe = z - era * 146097;
    const long long yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    long long y = yoe + era * 400;
    const long long doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const long long mp = (5 * doy + 2) / 153;
    const long long d = doy - (153 * mp + 2) / 5 + 1;
    const long long m = mp < 10 ? mp + 3 : mp - 9;
    if (m <= 2) ++y;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%04lld-%02lld-%02lldT%02lld:%02lld:%02lldZ", y, m, d, rem / 3600,
                  rem / 60 % 60, rem % 60);
    return buf;
}

std::string license_case(bool ai, int concluded, int declared) {
    const std::string base = "https://example.org/spdxdocs/license-case/";
    const std::string pkg = base + "pkg";
    json node = {{"type", ai ? "ai_AIPackage" : "dataset_DatasetPackage"},
                 {"spdxId", pkg},
                 {"name", "pkg"},
                 {"packageVersion", "1"},
                 {"buildTime", "2024-01-01T00:00:00Z"},
                 {"releaseTime", "2024-01-01T00:00:00Z"},
                 {"downloadLocation", {"https://example.org/pkg"}},
                 {"primaryPurpose", ai ? "model" : "data"},
                 {"suppliedBy", {{{"type", "Organization"}, {"name", "Supplier"}}}}};
    if (!ai) {
        node["originatedBy"] = node["suppliedBy"];
        node["dataset_datasetType"] = {"text"};
    }
    json graph = json::array({{{"type", "SpdxDocument"},
                               {"spdxId", base + "doc"},
                               {"creationInfo",
                                {{"type", "CreationInfo"},
                                 {"created", "2024-01-01T00:00:00Z"},
                                 {"createdBy", {{{"type", "Tool"}, {"name", "t"}}}}}},
                               {"profileConformance", {"core", "software", ai ? "ai" : "dataset"}},
                               {"rootElement", {pkg}}},
                              node});
    int n = 0;
    for (auto [type, copies] : {std::pair{"hasConcludedLicense", concluded}, std::pair{"hasDeclaredLicense", declared}}) {
        for (int i = 0; i < copies; ++i) {
            graph.push_back({{"type", "Relationship"},
                             {"spdxId", base + "rel-" + std::to_string(n++)},
                             {"relationshipType", type},
                             {"from", pkg},
                             {"to", {"https://spdx.org/licenses/MIT"}}});
        }
    }
    return json{{"@context", "https://spdx.org/rdf/3.0.1/spdx-context.jsonld"}, {"@graph", graph}}.dump(2);
}

int run_process(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string shell_quote(std::string_view arg) {
    std::string out = "'";
    for (char c : arg) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

}  // namespace testkit
