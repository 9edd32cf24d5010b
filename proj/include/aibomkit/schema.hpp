#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "aibomkit/model.hpp"

namespace aibomkit {

/// Every node shape the serialization knows, identified by its "type" tag.
enum class NodeClass {
    document, creation_info, ai_package, dataset_package, file, agent, license,
    dictionary_entry, energy_consumption, energy_description, relationship
};

enum class ValueKind {
    text, text_list, iri, iri_list, timestamp, enumeration, enumeration_list,
    non_negative_integer, decimal, agent_list, dictionary_list, energy_consumption,
    energy_description_list, creation_info
};

/// One serialized property of a node class.
struct FieldInfo {
    std::string_view key;
    ValueKind kind;
    bool max_one;
    std::optional<EnumKind> enum_kind = std::nullopt;
};

std::span<const FieldInfo> field_inventory(NodeClass cls) noexcept;
const FieldInfo* find_field(NodeClass cls, std::string_view key) noexcept;

std::string_view type_tag(NodeClass cls) noexcept;
/// Agent kinds share NodeClass::agent; "Person", "Organization" and "Tool" all map there.
std::optional<NodeClass> node_class_from_tag(std::string_view tag) noexcept;

/// "ai_domain" -> "domain", "dataset_knownBias" -> "knownBias"; other keys unchanged.
std::string_view strip_profile_prefix(std::string_view key) noexcept;

/// Properties referenced by regulatory mappings that live outside the modelled
/// profiles and are only ever carried as opaque pass-through values.
std::span<const std::string_view> pass_through_fields() noexcept;

/// True if `name` (unprefixed) is a modelled field of some node class or a pass-through field.
bool is_known_field_name(std::string_view name) noexcept;

}  // namespace aibomkit
