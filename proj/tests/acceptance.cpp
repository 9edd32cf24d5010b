// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "aibomkit/compliance.hpp"
#include "aibomkit/fixtures.hpp"
#include "aibomkit/serialization.hpp"
#include "aibomkit/validator.hpp"
#include "support.hpp"

using namespace aibomkit;
namespace fs = std::filesystem;

namespace {

/// Collects the reasons a criterion failed.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::vector<Diagnostic> errors_of(const std::vector<Diagnostic>& ds) {
    std::vector<Diagnostic> out;
    for (const auto& d : ds)
        if (d.severity == Severity::error) out.push_back(d);
    return out;
}

void schema_completeness(Check& c) {
    std::map<std::pair<std::string_view, std::string_view>, std::string_view> rules;
    for (const auto& r : rule_catalog()) {
        if (r.id.substr(2, 3) == "-M-") rules[{r.target, r.field}] = r.id;
    }
    std::set<std::string_view> matched;
    int ai = 0, dataset = 0;
    for (const auto& row : testkit::mandatory_rows()) {
        const bool is_ai = row.package_type == "ai_AIPackage";
        (is_ai ? ai : dataset)++;
        const auto it = rules.find({is_ai ? "AIPackage" : "DatasetPackage", row.field});
        if (it == rules.end()) {
            c.expect(false, "no rule for " + std::string(row.package_type) + "." + std::string(row.field));
            continue;
        }
        c.expect(matched.insert(it->second).second, "rule mapped twice: " + std::string(it->second));
    }
    c.expect(ai == 10, "AI rows: " + std::to_string(ai));
    c.expect(dataset == 11, "dataset rows: " + std::to_string(dataset));
    c.expect(matched.size() == rules.size(), "catalog has mandatory rules without a row");
}

void mutation_suite(Check& c) {
    for (const auto& entry : fixture_index()) {
        if (entry.conformant) {
            c.expect(errors_of(validate_document(load_fixture(entry.name))).empty(), entry.name + " has errors");
        }
    }
    const auto mutations = testkit::mandatory_deletions(fixture_bytes("simplehtr"));
    c.expect(mutations.size() == 19, "mutation count " + std::to_string(mutations.size()));
    for (const auto& m : mutations) {
        const auto errs = errors_of(validate_document(read_document(m.bytes).document));
        c.expect(errs.size() == 1 && errs[0].path == m.field && errs[0].element_id == m.package_id,
                 "deleting " + m.package_type + "." + m.field + " gave " + std::to_string(errs.size()) + " errors");
    }
}

void license_law(Check& c) {
    int cases = 0;
    for (bool ai : {true, false}) {
        const auto clean = validate_document(read_document(testkit::license_case(ai, 1, 1)).document);
        c.expect(errors_of(clean).empty(), "one of each license is not clean");
        for (bool concluded : {true, false}) {
            for (int copies : {0, 2}) {
                ++cases;
                const auto text = concluded ? testkit::license_case(ai, copies, 1) : testkit::license_case(ai, 1, copies);
                const auto errs = errors_of(validate_document(read_document(text).document));
                c.expect(errs.size() == 1, std::string(ai ? "ai" : "dataset") + (concluded ? " concluded x" : " declared x") +
                                               std::to_string(copies) + " not an error");
            }
        }
    }
    c.expect(cases == 8, "case count");
}

void snippet_corpus(Check& c) {
    std::size_t n = 0;
    for (const auto& entry : fixture_index()) {
        if (!entry.snippet) continue;
        ++n;
        const auto bytes = fixture_bytes(entry.name);
        try {
            const auto result = read_document(bytes);
            c.expect(result.diagnostics.empty(), entry.name + " has reader findings");
            for (const auto& e : result.document.elements())
                c.expect(check_field_values(e).empty(), entry.name + " fails field-local checks");
            const auto once = write_document(result.document);
            c.expect(canonicalize(once) == once, entry.name + " is not byte-stable");
            c.expect(read_document(once).document == result.document, entry.name + " changes on round-trip");
        } catch (const std::exception& e) {
            c.expect(false, entry.name + ": " + e.what());
        }
    }
    c.expect(n >= 25, "only " + std::to_string(n) + " snippets");

    const auto size_doc = load_fixture("snippet/datasetSize");
    const auto* ds = std::get_if<DatasetPackage>(&size_doc.elements()[0]);
    c.expect(ds && ds->dataset_size == 2689u, "datasetSize 2689");

    const auto energy_doc = load_fixture("snippet/energyQuantity");
    const auto* ai = std::get_if<AIPackage>(&energy_doc.elements()[0]);
    const bool energy_ok = ai && ai->energy_consumption && !ai->energy_consumption->inference.empty() &&
                           ai->energy_consumption->inference[0].energy_quantity &&
                           ai->energy_consumption->inference[0].energy_quantity->lexical() == "0.042" &&
                           ai->energy_consumption->inference[0].energy_unit == EnergyUnit::kilowatt_hour;
    c.expect(energy_ok, "energyQuantity 0.042 kilowattHour");

    const auto hp_doc = load_fixture("snippet/hyperparameter");
    const auto* hp = std::get_if<AIPackage>(&hp_doc.elements()[0]);
    c.expect(hp && !hp->hyperparameter.empty() && hp->hyperparameter[0].key == "cnn_kernel_vals" &&
                 hp->hyperparameter[0].value == "[5, 5, 3, 3, 3]",
             "hyperparameter cnn_kernel_vals");
}

template <class E>
void enum_count(Check& c, std::size_t expected, std::string_view near_miss) {
    const auto n = EnumTraits<E>::tokens.size();
    c.expect(n == expected, std::string(EnumTraits<E>::name) + " has " + std::to_string(n) + " members, expected " +
                                std::to_string(expected));
    c.expect(!try_parse_enum<E>(near_miss), std::string(EnumTraits<E>::name) + " accepts '" + std::string(near_miss) + "'");
}

void enumeration_counts(Check& c) {
    enum_count<SoftwarePurpose>(c, 27, "Model");
    enum_count<DatasetType>(c, 14, "noassertion");
    enum_count<DatasetAvailability>(c, 5, "DirectDownload");
    enum_count<SafetyRisk>(c, 4, "High");
    enum_count<ConfidentialityLevel>(c, 4, "Amber");
    enum_count<EnergyUnit>(c, 3, "kilowatthour");
    enum_count<Presence>(c, 3, "NoAssertion");
}

void conditional_energy(Check& c) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        AIPackage p;
        p.energy_consumption = testkit::random_energy(rng);
        const bool expected = testkit::energy_incomplete(*p.energy_consumption);
        if (check_conditional_energy(p).empty() == expected) {
            c.expect(false, "tree " + std::to_string(i) + " misjudged");
            return;
        }
    }
}

void timestamp_format(Check& c) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long long> dist(-62135596800LL, 253402300799LL);
    for (int i = 0; i < 10000; ++i) {
        const auto text = testkit::civil_timestamp(dist(rng));
        const auto t = Timestamp::try_parse(text);
        if (!t || t->to_string() != text) {
            c.expect(false, "round-trip of " + text);
            return;
        }
    }
    for (const char* bad : {"2024-04-24T12:00:00+00:00", "2024-04-24T12:00:00-05:00", "2024-04-24T12:00:00.000Z",
                            "2024-04-24T12:00:00.5Z", "2023-02-29T00:00:00Z", "2024-02-30T00:00:00Z",
                            "2024-00-10T00:00:00Z", "2024-06-31T00:00:00Z", "2024-04-24T25:00:00Z"}) {
        c.expect(!Timestamp::try_parse(bad), std::string("accepted ") + bad);
    }
}

void compliance_coverage(Check& c) {
    // Clause references of the table rows, in order; the one marked unsupported is last but one.
    const std::vector<std::string> citations{
        "Annex IX (1); Annex VIII Section C (3); Annex VIII Section A (4); Annex VIII Section B (4)",
        "Annex VIII Section A (4); Annex VIII Section B (4)",
        "Annex VIII Section A (1); Annex VIII Section B (1); Annex VIII Section C (1)",
        "Annex VII Section C (1)",
        "Annex VIII Section A (5); Annex VIII Section B (5); Annex IX (3)",
        "Annex VIII Section A (6)",
        "Annex VIII Section A (7)",
        "Annex VIII Section B (7)",
        "Annex IV (1)(h)",
        "Annex VIII Section C (4); Annex VIII Section C (5)",
        "Annex IV (8); Annex VIII Section A (8)",
        "Annex IX (4)",
        "Annex IX (2)",
        "Annex VIII Section A (10)",
    };
    const auto fw = load_framework("eu-ai-act");
    c.expect(fw.requirements.size() == citations.size(), "requirement count " + std::to_string(fw.requirements.size()));
    for (std::size_t i = 0; i < std::min(citations.size(), fw.requirements.size()); ++i) {
        const auto& r = fw.requirements[i];
        c.expect(r.citation == citations[i], r.id + " citation '" + r.citation + "'");
        c.expect(r.mappable == (citations[i] != "Annex IX (2)"), r.id + " mappability");
    }
    for (const auto& e : assess(load_fixture("full"), fw).entries) {
        c.expect(e.status == CoverageStatus::satisfied || e.status == CoverageStatus::not_mappable,
                 e.requirement_id + " not satisfied on full fixture");
    }
    for (const auto& e : assess(SpdxDocument{}, fw).entries) {
        c.expect(e.status == CoverageStatus::missing || e.status == CoverageStatus::not_mappable,
                 e.requirement_id + " not missing on empty document");
    }
}

void canonicalization(Check& c) {
    std::mt19937_64 rng(99);
    const std::string bytes(fixture_bytes("full"));
    const auto expected = canonicalize(bytes);
    for (int i = 0; i < 100; ++i) {
        if (canonicalize(testkit::shuffle_keys(bytes, rng)) != expected) {
            c.expect(false, "permutation " + std::to_string(i) + " differs");
            return;
        }
    }
    c.expect(canonicalize(expected) == expected, "not idempotent");
}

void cli_contract(Check& c, const std::string& cli) {
    const fs::path dir = fs::temp_directory_path() / ("aibomkit-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto write = [&](const std::string& name, std::string_view bytes) {
        std::ofstream(dir / name, std::ios::binary) << bytes;
        return (dir / name).string();
    };
    const auto good = write("good.json", fixture_bytes("simplehtr"));
    const auto full = write("full.json", fixture_bytes("full"));
    const auto bad = write("bad.json", fixture_bytes("co2"));
    const auto junk = write("junk.json", "{\"@graph\": [");
    const auto missing = (dir / "missing.json").string();

    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> cases{
        {{"validate", good}, 0},
        {{"validate", bad}, 1},
        {{"validate", missing}, 2},
        {{"validate", junk}, 2},
        {{"validate", good, "--output", "yaml"}, 2},
        {{"report", full, "--framework", "eu-ai-act"}, 0},
        {{"report", bad, "--framework", "eu-ai-act"}, 1},
        {{"report", full, "--framework", "unknown"}, 2},
        {{"report", missing, "--framework", "eu-ai-act"}, 2},
        {{"scaffold", "ai", "-"}, 0},
        {{"scaffold", "dataset", (dir / "scaffold.json").string()}, 0},
        {{"scaffold", "ai", (dir / "no-such-dir" / "x.json").string()}, 2},
        {{"scaffold", "robot"}, 2},
        {{"inspect", good}, 0},
        {{"inspect", good, "https://example.org/spdxdocs/simplehtr/word-model"}, 0},
        {{"inspect", good, "https://example.org/absent"}, 1},
        {{"inspect", junk}, 2},
        {{"canonicalize", good}, 0},
        {{"canonicalize", write("copy.json", fixture_bytes("co2")), "--in-place"}, 0},
        {{"canonicalize", junk}, 2},
        {{"bogus"}, 2},
        {{}, 2},
    };
    for (const auto& tc : cases) {
        std::string cmd = testkit::shell_quote(cli);
        std::string shown;
        for (const auto& a : tc.args) {
            cmd += " " + testkit::shell_quote(a);
            shown += " " + a;
        }
        const int code = testkit::run_process(cmd + " >/dev/null 2>&1");
        c.expect(code == tc.code, "aibomkit" + shown + " exited " + std::to_string(code) + ", expected " +
                                      std::to_string(tc.code));
    }
    fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "aibomkit";
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"schema completeness", schema_completeness},
        {"mutation suite", mutation_suite},
        {"exactly-one license law", license_law},
        {"snippet corpus", snippet_corpus},
        {"enumeration counts", enumeration_counts},
        {"conditional energy rule", conditional_energy},
        {"timestamp format", timestamp_format},
        {"compliance coverage", compliance_coverage},
        {"canonicalization", canonicalization},
        {"CLI contract", [&](Check& c) { cli_contract(c, cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        const bool ok = c.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " (" << ms
                  << " ms)\n";
        for (const auto& f : c.failures) std::cout << "    " << f << '\n';
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed;
}
