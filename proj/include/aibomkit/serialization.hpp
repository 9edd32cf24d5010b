#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aibomkit/document.hpp"
#include "aibomkit/model.hpp"

namespace aibomkit {

struct ReadResult {
    SpdxDocument document;
    /// Informational findings from reading (unknown types and properties).
    std::vector<Diagnostic> diagnostics;
};

/// Parses the JSON serialization. Accepts a `{"@context", "@graph"}` envelope, a
/// bare array of nodes, or a single node object.
///
/// Throws SyntaxError on malformed JSON, MissingType for an object node without
/// "type", DuplicateId when two elements share an spdxId. Everything else that
/// does not fit the model is preserved verbatim and never fatal.
ReadResult read_document(std::string_view bytes);

/// Deterministic canonical form: UTF-8, LF, 2-space indent, "type" then
/// "spdxId" first in every object, remaining keys sorted, trailing newline.
std::string write_document(const SpdxDocument& doc);

/// write_document(read_document(bytes).document)
std::string canonicalize(std::string_view bytes);

/// JSON node for one element / relationship / the document node, as written.
nlohmann::json to_node(const Element& e);
nlohmann::json to_node(const Relationship& r);
nlohmann::json document_node(const SpdxDocument& doc);

/// The canonical printer used by write_document, usable on any JSON value.
std::string dump_canonical(const nlohmann::json& value);

}  // namespace aibomkit
