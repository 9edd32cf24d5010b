#include "aibomkit/fixtures.hpp"

#include <algorithm>

#include "aibomkit/embedded.hpp"
#include "aibomkit/serialization.hpp"

namespace aibomkit {

using nlohmann::json;

namespace {

constexpr std::string_view kIndexFile = "index.json";

std::string_view embedded(std::string_view file) {
    auto files = detail::embedded_fixtures();
    auto it = std::ranges::find(files, file, &detail::EmbeddedFile::name);
    return it == files.end() ? std::string_view{} : it->content;
}

FixtureEntry parse_entry(const json& j) {
    FixtureEntry e;
    e.name = j.at("name").get<std::string>();
    e.file = j.at("file").get<std::string>();
    e.snippet = j.value("snippet", false);
    const auto& expect = j.at("expect");
    if (expect.is_string() && expect.get<std::string>() == "conformant") {
        e.conformant = true;
    } else {
        e.rule_ids = expect.at("diagnostics").get<std::vector<std::string>>();
    }
    e.placeholders = j.value("placeholders", std::vector<std::string>{});
    return e;
}

}  // namespace

std::vector<FixtureEntry> fixture_index() {
    static const std::vector<FixtureEntry> index = [] {
        std::vector<FixtureEntry> out;
        const auto doc = json::parse(embedded(kIndexFile));
        for (const auto& entry : doc.at("fixtures")) out.push_back(parse_entry(entry));
        return out;
    }();
    return index;
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& e : fixture_index()) names.push_back(e.name);
    return names;
}

std::string_view fixture_bytes(std::string_view name) {
    for (const auto& e : fixture_index()) {
        if (e.name == name) {
            auto bytes = embedded(e.file);
            if (!bytes.empty()) return bytes;
        }
    }
    throw UnknownFixture(std::string(name));
}

SpdxDocument load_fixture(std::string_view name) { return read_document(fixture_bytes(name)).document; }

}  // namespace aibomkit
