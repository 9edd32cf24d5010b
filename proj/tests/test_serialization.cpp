#include <doctest.h>

#include <random>

#include "aibomkit/fixtures.hpp"
#include "aibomkit/serialization.hpp"
#include "support.hpp"

using namespace aibomkit;
using nlohmann::json;

namespace {

const AIPackage& first_ai(const SpdxDocument& doc) {
    for (const auto& e : doc.elements())
        if (const auto* p = std::get_if<AIPackage>(&e)) return *p;
    throw std::runtime_error("no AIPackage");
}

const DatasetPackage& first_dataset(const SpdxDocument& doc) {
    for (const auto& e : doc.elements())
        if (const auto* p = std::get_if<DatasetPackage>(&e)) return *p;
    throw std::runtime_error("no DatasetPackage");
}

}  // namespace

TEST_CASE("reader accepts envelope, bare array and single node") {
    const std::string node = R"({"type":"ai_AIPackage","spdxId":"https://x.org/p","name":"p"})";
    const auto a = read_document(R"({"@context":"https://x.org/ctx","@graph":[)" + node + "]}").document;
    const auto b = read_document("[" + node + "]").document;
    const auto c = read_document(node).document;
    CHECK(a.context == "https://x.org/ctx");
    for (const auto* d : {&a, &b, &c}) {
        REQUIRE(d->elements().size() == 1);
        CHECK(first_ai(*d).core.name == "p");
    }
    CHECK(b.context == std::string(kDefaultContext));
}

TEST_CASE("reader errors") {
    CHECK_THROWS_AS(read_document("{not json"), SyntaxError);
    CHECK_THROWS_AS(read_document("42"), SyntaxError);
    CHECK_THROWS_AS(read_document(R"({"@graph":{}})"), SyntaxError);
    CHECK_THROWS_AS(read_document(R"([{"name":"untyped"}])"), MissingType);
    CHECK_THROWS_AS(read_document(R"([{"type":"ai_AIPackage","spdxId":"https://x.org/p"},
                                      {"type":"ai_AIPackage","spdxId":"https://x.org/p"}])"),
                    DuplicateId);
}

TEST_CASE("unknown types and properties survive as opaque values") {
    const std::string text = R"([
      {"type":"ai_AIPackage","spdxId":"https://x.org/p","name":"p","x_vendor":{"k":[1,2]},
       "ai_autonomyType":"maybe","buildTime":"2024-01-01T00:00:00+01:00"},
      {"type":"security_Vulnerability","spdxId":"https://x.org/v","severity":"high"}])";
    const auto result = read_document(text);
    std::vector<std::string> ids;
    for (const auto& d : result.diagnostics) ids.push_back(d.rule_id);
    CHECK(ids == std::vector<std::string>{"GEN-01", "GEN-02"});
    const auto& p = first_ai(result.document);
    CHECK_FALSE(p.autonomy_type);
    CHECK(p.core.extras.at("ai_autonomyType") == "maybe");
    CHECK(p.core.extras.at("buildTime") == "2024-01-01T00:00:00+01:00");
    const auto out = json::parse(write_document(result.document));
    CHECK(out["@graph"][0]["x_vendor"] == json::parse(R"({"k":[1,2]})"));
    CHECK(out["@graph"][1]["severity"] == "high");
    CHECK(read_document(write_document(result.document)).document == result.document);
}

TEST_CASE("scalar values are accepted where lists are expected") {
    const auto doc = read_document(R"({"type":"ai_AIPackage","ai_typeOfModel":"CNN",
        "downloadLocation":"https://x.org/d","suppliedBy":{"type":"Organization","name":"o"}})").document;
    const auto& p = first_ai(doc);
    CHECK(p.type_of_model == std::vector<std::string>{"CNN"});
    CHECK(p.core.download_location == std::vector<std::string>{"https://x.org/d"});
    REQUIRE(p.core.supplied_by.size() == 1);
    CHECK(json::parse(write_document(doc))["@graph"][0]["ai_typeOfModel"].is_array());
}

TEST_CASE("canonical writer layout") {
    const auto text = canonicalize(R"({"@graph":[{"spdxId":"https://x.org/p","zeta":1,"type":"ai_AIPackage","alpha":2,"name":"p"}],"@context":"c"})");
    CHECK(text ==
          "{\n"
          "  \"@context\": \"c\",\n"
          "  \"@graph\": [\n"
          "    {\n"
          "      \"type\": \"ai_AIPackage\",\n"
          "      \"spdxId\": \"https://x.org/p\",\n"
          "      \"alpha\": 2,\n"
          "      \"name\": \"p\",\n"
          "      \"zeta\": 1\n"
          "    }\n"
          "  ]\n"
          "}\n");
}

TEST_CASE("canonical form ignores key order") {
    std::mt19937_64 rng(11);
    for (const auto& name : {"simplehtr", "full", "co2"}) {
        const auto bytes = std::string(fixture_bytes(name));
        const auto expected = canonicalize(bytes);
        for (int i = 0; i < 100; ++i) REQUIRE(canonicalize(testkit::shuffle_keys(bytes, rng)) == expected);
        CHECK(canonicalize(expected) == expected);
    }
}

TEST_CASE("document fixtures are stored in canonical form") {
    for (const auto& entry : fixture_index()) {
        if (entry.snippet) continue;
        CAPTURE(entry.name);
        const auto bytes = fixture_bytes(entry.name);
        CHECK(canonicalize(bytes) == bytes);
    }
}

TEST_CASE("snippets round-trip to byte-identical canonical form") {
    std::size_t n = 0;
    for (const auto& entry : fixture_index()) {
        if (!entry.snippet) continue;
        CAPTURE(entry.name);
        ++n;
        const auto first = canonicalize(fixture_bytes(entry.name));
        CHECK(canonicalize(first) == first);
        CHECK(read_document(first).document == read_document(fixture_bytes(entry.name)).document);
        CHECK(read_document(first).diagnostics.empty());
    }
    CHECK(n >= 25);
}

TEST_CASE("snippet values are typed") {
    CHECK(first_dataset(load_fixture("snippet/datasetSize")).dataset_size == 2689u);

    const auto energy_doc = load_fixture("snippet/energyQuantity");
    const auto& energy = first_ai(energy_doc).energy_consumption;
    REQUIRE(energy);
    REQUIRE(energy->inference.size() == 1);
    CHECK(energy->inference[0].energy_quantity->lexical() == "0.042");
    CHECK(energy->inference[0].energy_unit == EnergyUnit::kilowatt_hour);

    const auto hp_doc = load_fixture("snippet/hyperparameter");
    const auto& hp = first_ai(hp_doc).hyperparameter;
    REQUIRE_FALSE(hp.empty());
    CHECK(hp[0].key == "cnn_kernel_vals");
    CHECK(hp[0].value == "[5, 5, 3, 3, 3]");
}

TEST_CASE("agent references stay references") {
    const auto doc = load_fixture("simplehtr");
    const auto& p = first_ai(doc);
    REQUIRE(p.core.supplied_by.size() == 1);
    CHECK(p.core.supplied_by[0].is_reference());
    auto out = json::parse(write_document(doc));
    CHECK(testkit::find_node(out, *p.core.spdx_id)->at("suppliedBy")[0].is_string());
}
