#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aibomkit/model.hpp"

namespace testkit {

/// Mandatory rows of the AI and dataset package tables, transcribed by hand:
/// (package type tag, serialized key or "relationship:<type>").
struct MandatoryRow {
    std::string_view package_type;
    std::string_view field;
};
const std::vector<MandatoryRow>& mandatory_rows();

/// One deletion of a mandatory field from a fixture.
struct Mutation {
    std::string package_type;
    std::string package_id;
    std::string field;
    std::string bytes;
};

/// Every deletion of a mandatory row (except spdxId) from every package in the
/// document. Fields are dropped from the node; relationships are removed from the graph.
std::vector<Mutation> mandatory_deletions(std::string_view fixture_bytes);

/// Reorders the keys of every object at random; arrays keep their order.
std::string shuffle_keys(std::string_view bytes, std::mt19937_64& rng);

/// Random energy tree. Each description independently may lack a quantity or a unit.
aibomkit::EnergyConsumption random_energy(std::mt19937_64& rng);
/// Oracle: does some description lack a quantity or a unit?
bool energy_incomplete(const aibomkit::EnergyConsumption& e);

/// Independent civil calendar formatting of seconds since 1970-01-01.
std::string civil_timestamp(long long seconds);

/// Graph node with the given spdxId, or nullptr.
nlohmann::json* find_node(nlohmann::json& doc, std::string_view id);

/// Package with a given number of copies of each license relationship.
std::string license_case(bool ai, int concluded, int declared);

/// Runs a shell command, returning its exit status (-1 if it did not exit normally).
int run_process(const std::string& command);
/// Single-quotes an argument for /bin/sh.
std::string shell_quote(std::string_view arg);

}  // namespace testkit
