#include "ops.hpp"

namespace flagcodes {

const ConstantDimensionCode& require_cdc(const Document& doc) {
    if (const auto* code = std::get_if<ConstantDimensionCode>(&doc.payload)) return *code;
    fail(ErrorCode::ParseError, std::string("expected a cdc document, got ") + doc.kind());
}

const FlagCode& require_flagcode(const Document& doc) {
    if (const auto* code = std::get_if<FlagCode>(&doc.payload)) return *code;
    fail(ErrorCode::ParseError, std::string("expected a flagcode document, got ") + doc.kind());
}

const CodeProduct& require_codeproduct(const Document& doc) {
    if (const auto* product = std::get_if<CodeProduct>(&doc.payload)) return *product;
    fail(ErrorCode::ParseError, std::string("expected a codeproduct document, got ") + doc.kind());
}

Json op_distance(const Document& doc) {
    if (const auto* code = std::get_if<ConstantDimensionCode>(&doc.payload)) {
        MaxDistanceResult max = is_max_distance(*code);
        Json out{{"kind", "cdc"},
                 {"size", code->size()},
                 {"min_distance", min_distance(*code)},
                 {"bound", max_distance_bound(code->k(), doc.ambient.n)},
                 {"is_max_distance", max.value}};
        if (max.degenerate_singleton)
            out["note"] = "singleton code: distance 0 by convention, bound unreachable";
        return out;
    }
    const FlagCode& code = require_flagcode(doc);
    return Json{{"kind", "flagcode"},
                {"size", code.size()},
                {"min_distance", min_flag_distance(code)},
                {"bound", flag_distance_bound(code.typevec())},
                {"is_optimum_distance", is_odfc_direct(code)}};
}

Json op_projected(const Document& doc) {
    const FlagCode& code = require_flagcode(doc);
    std::vector<ConstantDimensionCode> projected = projected_codes(code);
    return document_to_json(make_document(CodeProduct(code.ambient(), std::move(projected))));
}

Json op_check_genset(const Document& doc) {
    const CodeProduct& product = require_codeproduct(doc);
    GeneratingSetReport report = is_generating_set(product);
    std::vector<Flag> flags = product_flags(product);
    Json out{{"generating", report.generating}, {"product_size", flags.size()}};
    if (!report.generating) {
        out["witness"] = Json{{"level", *report.witness_level},
                              {"subspace", subspace_to_json(*report.witness_subspace)}};
    }
    return out;
}

Json op_sic_closure(const Document& doc) {
    const CodeProduct& product = require_codeproduct(doc);
    return document_to_json(make_document(sic_closure(product)));
}

Json op_check_sic(const Document& doc) {
    const FlagCode& code = require_flagcode(doc);
    SicReport report = is_sic(code);
    Json out{{"sic", report.sic}};
    if (report.witness) out["witness"] = flag_to_json(*report.witness);
    return out;
}

Json op_check_determined(const Document& doc) {
    const FlagCode& code = require_flagcode(doc);
    DeterminationReport report = is_determined(code);
    Json out{{"determined", report.determined}};
    if (report.sic_witness) {
        out["reason"] = "not-sic";
        out["sic_witness"] = flag_to_json(*report.sic_witness);
    } else if (report.removable_flag) {
        out["reason"] = "removable-flag";
        out["removable_flag"] = flag_to_json(*report.removable_flag);
    }
    return out;
}

Json op_classify(const Document& doc) {
    return classification_to_json(classify(require_flagcode(doc)));
}

Json op_odfc_check(const Document& doc) {
    const FlagCode& code = require_flagcode(doc);
    bool direct = is_odfc_direct(code);
    bool via_projected = is_odfc_via_projected(code);
    if (direct != via_projected)
        fail(ErrorCode::Internal, "optimum-distance characterizations disagree");
    return Json{{"odfc", direct},
                {"direct", direct},
                {"via_projected", via_projected},
                {"min_distance", min_flag_distance(code)},
                {"bound", flag_distance_bound(code.typevec())}};
}

Json op_aut(const Document& doc, const AutOptions& options) {
    std::vector<GroupElement> stab;
    if (const auto* code = std::get_if<ConstantDimensionCode>(&doc.payload))
        stab = aut_group(*code, options.search);
    else
        stab = aut_flagcode(require_flagcode(doc), options.search);

    Json out{{"mode", options.search.semilinear ? "semilinear" : "linear"},
             {"aut_size", stab.size()}};
    if (stab.size() <= options.max_elements) {
        Json elements = Json::array();
        for (const GroupElement& g : stab) elements.push_back(group_element_to_json(g));
        out["elements"] = std::move(elements);
    }
    return out;
}

Json op_equiv(const Document& doc, const Document& other, const SearchOptions& options) {
    if (std::string(doc.kind()) != other.kind())
        fail(ErrorCode::ParseError, "equivalence requires two documents of the same kind");
    require_same_ambient(doc.ambient, other.ambient);

    Json out{{"mode", options.semilinear ? "semilinear" : "linear"}};
    if (const auto* code = std::get_if<ConstantDimensionCode>(&doc.payload)) {
        const ConstantDimensionCode& rhs = require_cdc(other);
        std::optional<std::string> pruned_by;
        if (code->size() != rhs.size())
            pruned_by = "cardinality";
        else if (min_distance(*code) != min_distance(rhs))
            pruned_by = "min-distance";
        std::optional<GroupElement> witness = are_equivalent_codes(*code, rhs, options);
        out["equivalent"] = witness.has_value();
        out["witness"] = witness ? group_element_to_json(*witness) : Json(nullptr);
        out["pruned_by"] = pruned_by ? Json(*pruned_by) : Json(nullptr);
        return out;
    }
    EquivalenceReport report =
        are_equivalent_flagcodes(require_flagcode(doc), require_flagcode(other), options);
    out["equivalent"] = report.equivalent;
    out["witness"] = report.witness ? group_element_to_json(*report.witness) : Json(nullptr);
    out["pruned_by"] = report.pruned_by ? Json(*report.pruned_by) : Json(nullptr);
    return out;
}

} // namespace flagcodes
