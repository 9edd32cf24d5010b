#include "aibomkit/document.hpp"

namespace aibomkit {

void SpdxDocument::add_element(Element e) {
    const auto& id = element_id(e);
    if (id) {
        if (index_.contains(*id)) throw DuplicateId(*id);
        index_.emplace(*id, elements_.size());
    }
    elements_.push_back(std::move(e));
}

void SpdxDocument::add_relationship(Relationship r) { relationships_.push_back(std::move(r)); }

const Element* SpdxDocument::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &elements_[it->second];
}

std::optional<std::size_t> SpdxDocument::position(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Relationship> SpdxDocument::relationships_from(
    std::string_view id, std::optional<RelationshipType> type) const {
    std::vector<Relationship> out;
    for (const auto& r : relationships_) {
        if (r.from == id && (!type || r.type == *type)) out.push_back(r);
    }
    return out;
}

std::vector<ResolvedTarget> SpdxDocument::resolve_targets(const Relationship& r) const {
    std::vector<ResolvedTarget> out;
    out.reserve(r.to.size());
    for (const auto& t : r.to) {
        out.push_back({t, contains(t) ? TargetStatus::internal : TargetStatus::external});
    }
    return out;
}

bool SpdxDocument::has_document_node() const noexcept {
    return spdx_id || name || creation_info || !profile_conformance.empty() ||
           !root_elements.empty() || !extras.empty();
}

bool operator==(const SpdxDocument& a, const SpdxDocument& b) {
    return a.context == b.context && a.envelope == b.envelope && a.spdx_id == b.spdx_id && a.name == b.name &&
           a.creation_info == b.creation_info && a.profile_conformance == b.profile_conformance &&
           a.root_elements == b.root_elements && a.extras == b.extras &&
           a.elements_ == b.elements_ && a.relationships_ == b.relationships_;
}

}  // namespace aibomkit
