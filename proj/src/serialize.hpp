#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "incdec.hpp"

namespace flagcodes {

using Json = nlohmann::ordered_json;

/// One interchange document in the "flagcode/1" format: a header naming the
/// field and ambient dimension, plus one payload (a constant dimension
/// code, a flag code, or a code product). Parsing canonicalizes bases and
/// ordering, so parse ∘ emit is the identity on canonical documents and
/// emit is byte-stable under input permutation.
struct Document {
    AmbientSpace ambient;
    std::variant<ConstantDimensionCode, FlagCode, CodeProduct> payload;

    const char* kind() const;
};

Document parse_document(const std::string& text);
Document document_from_json(const Json& j);

Json document_to_json(const Document& doc);

/// Canonical text form: fixed key order, two-space indentation, trailing
/// newline.
std::string emit_document(const Document& doc);
std::string emit_json(const Json& j);

Document make_document(ConstantDimensionCode code);
Document make_document(FlagCode code);
Document make_document(CodeProduct product);

// Payload/value serializers used by documents and by the CLI result
// objects.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const AmbientSpace& ambient, const Json& j);
Json flag_to_json(const Flag& f);
Json group_element_to_json(const GroupElement& g);
Json classification_to_json(const Classification& c);

} // namespace flagcodes
