#include <doctest.h>

#include "aibomkit/document.hpp"

using namespace aibomkit;

namespace {

AIPackage package(std::string id) {
    AIPackage p;
    p.core.spdx_id = std::move(id);
    return p;
}

Relationship rel(RelationshipType t, std::string from, std::vector<std::string> to) {
    Relationship r;
    r.type = t;
    r.from = std::move(from);
    r.to = std::move(to);
    return r;
}

}  // namespace

TEST_CASE("element index") {
    SpdxDocument doc;
    doc.add_element(package("https://x.org/a"));
    doc.add_element(DatasetPackage{});
    doc.add_element(DatasetPackage{});  // unidentified elements are allowed, and never collide
    doc.add_element(package("https://x.org/b"));
    CHECK(doc.elements().size() == 4);
    CHECK(doc.contains("https://x.org/a"));
    CHECK_FALSE(doc.contains("https://x.org/c"));
    CHECK(doc.position("https://x.org/b") == 3);
    CHECK_THROWS_AS(doc.add_element(package("https://x.org/a")), DuplicateId);
    CHECK(doc.elements().size() == 4);
}

TEST_CASE("relationship queries and target resolution") {
    SpdxDocument doc;
    doc.add_element(package("https://x.org/a"));
    doc.add_element(package("https://x.org/d"));
    doc.add_relationship(rel(RelationshipType::trained_on, "https://x.org/a", {"https://x.org/d", "https://elsewhere.org/e"}));
    doc.add_relationship(rel(RelationshipType::tested_on, "https://x.org/a", {"https://x.org/d"}));
    doc.add_relationship(rel(RelationshipType::trained_on, "https://x.org/d", {"https://x.org/a"}));

    CHECK(doc.relationships_from("https://x.org/a").size() == 2);
    const auto trained = doc.relationships_from("https://x.org/a", RelationshipType::trained_on);
    REQUIRE(trained.size() == 1);
    const auto targets = doc.resolve_targets(trained.front());
    REQUIRE(targets.size() == 2);
    CHECK(targets[0] == ResolvedTarget{"https://x.org/d", TargetStatus::internal});
    CHECK(targets[1] == ResolvedTarget{"https://elsewhere.org/e", TargetStatus::external});
}

TEST_CASE("document node presence and equality") {
    SpdxDocument a;
    CHECK_FALSE(a.has_document_node());
    a.spdx_id = "https://x.org/doc";
    CHECK(a.has_document_node());
    SpdxDocument b = a;
    CHECK(a == b);
    b.add_element(package("https://x.org/p"));
    CHECK_FALSE(a == b);
}
