#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aibomkit/model.hpp"

namespace aibomkit {

/// Default JSON-LD context written when a document carries none.
inline constexpr std::string_view kDefaultContext = "https://spdx.org/rdf/3.0.1/spdx-context.jsonld";

enum class TargetStatus { internal, external };

struct ResolvedTarget {
    std::string id;
    TargetStatus status;

    friend bool operator==(const ResolvedTarget&, const ResolvedTarget&) = default;
};

/// One SPDX document: an ordered element index plus an ordered relationship list.
///
/// Elements without an spdxId are accepted (profile snippets often omit it) but
/// cannot be looked up. Insertion order is preserved and is the write-out order.
class SpdxDocument {
public:
    /// "@context" of the envelope; usually a single IRI string.
    nlohmann::json context = std::string(kDefaultContext);
    /// Envelope keys other than "@context" and "@graph".
    Extras envelope;
    std::optional<std::string> spdx_id;
    std::optional<std::string> name;
    std::optional<CreationInfo> creation_info;
    std::vector<std::string> profile_conformance;
    std::vector<std::string> root_elements;
    Extras extras;

    /// Throws DuplicateId if the element's spdxId is already indexed.
    void add_element(Element e);
    void add_relationship(Relationship r);

    const Element* find(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id) != nullptr; }
    /// Position of the element in document order, if indexed.
    std::optional<std::size_t> position(std::string_view id) const;

    std::span<const Element> elements() const noexcept { return elements_; }
    std::span<const Relationship> relationships() const noexcept { return relationships_; }

    /// All relationships with `from == id`, optionally filtered by type, in document order.
    std::vector<Relationship> relationships_from(
        std::string_view id, std::optional<RelationshipType> type = std::nullopt) const;

    /// Classifies each `to` target as internal (indexed here) or external.
    std::vector<ResolvedTarget> resolve_targets(const Relationship& r) const;

    /// True when any document-node property is set (spdxId, creationInfo, profiles, ...).
    bool has_document_node() const noexcept;

    friend bool operator==(const SpdxDocument& a, const SpdxDocument& b);

private:
    std::vector<Element> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Relationship> relationships_;
};

}  // namespace aibomkit
